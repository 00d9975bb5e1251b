#ifndef SIGLAT_VERIFY_HPP
#define SIGLAT_VERIFY_HPP

#include <string>
#include <vector>

namespace siglat::verify {

struct Item {
    int id;
    std::string label;
    bool passed;
    std::string detail;       // counts and witnesses, deterministic text
    double elapsed_ms;
};

/// Runs the built-in verification suite: the finite-model properties of the
/// distributivity equation, the lattice-identity failure, the product-form
/// factorization, the oracle cross-checks and the determinism checks. Every
/// bound and tolerance is fixed here.
std::vector<Item> run_suite();

bool all_passed(const std::vector<Item>& items);

/// One line per item: "[PASS] 3 atom criterion equivalence: 1240/1240".
std::string format_lines(const std::vector<Item>& items);

/// Scripts used by the determinism round-trip check; also a handy corpus of
/// grammar coverage for tests.
const std::vector<std::string>& parser_corpus();

/// The built-in scripts the suite mines (also shipped under scripts/).
std::string distributivity_script();
std::string lattice_script();
std::string sup_distributivity_script();
std::string chain_script();

} // namespace siglat::verify

#endif
