#include "siglat/verify.hpp"

#include "siglat/dsl/miner.hpp"
#include "siglat/dsl/parser.hpp"
#include "siglat/dsl/printer.hpp"
#include "siglat/enumeration.hpp"
#include "siglat/product.hpp"
#include "siglat/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>

namespace siglat::verify {

namespace {

using std::uint64_t;

// ---------------------------------------------------------------------------
// Independent route: sigma-algebras as explicit families of subsets (bitmask
// indexed membership table), closed under complement and union by fixpoint.
// Kept deliberately separate from the partition-based implementation so the
// two can be compared.

struct Family {
    int n;
    std::vector<char> member;   // indexed by subset bitmask

    bool operator==(const Family& o) const { return n == o.n && member == o.member; }
};

uint64_t family_full(int n) { return (uint64_t{1} << n) - 1; }

Family closure_family(int n, const std::vector<uint64_t>& generators) {
    uint64_t full = family_full(n);
    Family fam{n, std::vector<char>(uint64_t{1} << n, 0)};
    std::vector<uint64_t> worklist;
    auto add = [&](uint64_t s) {
        if (!fam.member[s]) { fam.member[s] = 1; worklist.push_back(s); }
    };
    add(0);
    add(full);
    for (uint64_t g : generators) add(g & full);
    for (std::size_t i = 0; i < worklist.size(); ++i) {
        uint64_t a = worklist[i];
        add(~a & full);
        for (std::size_t j = 0; j <= i; ++j) add(a | worklist[j]);
    }
    return fam;
}

Family family_of(const SigmaAlgebra& s) {
    std::vector<uint64_t> gens;
    for (const Subset& atom : s.atoms().blocks()) gens.push_back(atom.bits());
    return closure_family(s.space().size(), gens);
}

Family oracle_meet(const Family& f, const Family& g) {
    Family out{f.n, std::vector<char>(f.member.size(), 0)};
    for (std::size_t s = 0; s < f.member.size(); ++s)
        out.member[s] = f.member[s] && g.member[s];
    return out;
}

Family oracle_join(const Family& f, const Family& g) {
    std::vector<uint64_t> gens;
    for (uint64_t s = 0; s < f.member.size(); ++s)
        if (f.member[s] || g.member[s]) gens.push_back(s);
    return closure_family(f.n, gens);
}

std::vector<uint64_t> oracle_atoms(const Family& f) {
    std::vector<uint64_t> members;
    for (uint64_t s = 1; s < f.member.size(); ++s)
        if (f.member[s]) members.push_back(s);
    std::vector<uint64_t> atoms;
    for (uint64_t a : members) {
        bool minimal = true;
        for (uint64_t b : members)
            if (b != a && (b & a) == b) { minimal = false; break; }
        if (minimal) atoms.push_back(a);
    }
    return atoms;
}

std::vector<uint64_t> atom_bits(const SigmaAlgebra& s) {
    std::vector<uint64_t> out;
    for (const Subset& atom : s.atoms().blocks()) out.push_back(atom.bits());
    return out;
}

bool same_atom_set(std::vector<uint64_t> a, std::vector<uint64_t> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// ---------------------------------------------------------------------------

std::vector<SigmaAlgebra> all_sigma_algebras(int n) {
    std::vector<SigmaAlgebra> out;
    for (const Partition& p : enumerate_partitions(n)) out.emplace_back(p);
    return out;
}

struct Shared {
    int exh_total = 0, exh_equal = 0, exh_incl = 0, exh_equiv = 0;
    int rnd_total = 0, rnd_incl = 0, rnd_equiv = 0;
};

Item timed(int id, std::string label, const std::function<std::pair<bool, std::string>()>& body) {
    auto started = std::chrono::steady_clock::now();
    auto [passed, detail] = body();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          started)
                    .count();
    return Item{id, std::move(label), passed, std::move(detail), ms};
}

std::string ratio(int ok, int total) {
    return std::to_string(ok) + "/" + std::to_string(total);
}

Item item_finite_distributivity(Shared& shared) {
    return timed(1, "finite distributivity (exhaustive)", [&]() -> std::pair<bool, std::string> {
        auto started = std::chrono::steady_clock::now();
        for (int nx = 1; nx <= 3; ++nx)
            for (int nu = 1; nu <= 3; ++nu) {
                auto as = all_sigma_algebras(nx);
                auto fs = all_sigma_algebras(nu);
                for (const auto& a : as)
                    for (const auto& f : fs)
                        for (const auto& g : fs) {
                            DistributivityReport rep = distributivity_report(a, f, g);
                            ++shared.exh_total;
                            if (rep.equal) ++shared.exh_equal;
                            if (rep.inclusion_ok) ++shared.exh_incl;
                            if (rep.equivalence_ok) ++shared.exh_equiv;
                        }
            }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              started)
                        .count();
        bool ok = shared.exh_total == 240 && shared.exh_equal == 240 &&
                  shared.exh_incl == 240 && ms < 5000.0;
        return {ok, ratio(shared.exh_equal, shared.exh_total) + " equal, " +
                        ratio(shared.exh_incl, shared.exh_total) + " inclusion"};
    });
}

Item item_one_sided_inclusion(Shared& shared) {
    return timed(2, "one-sided inclusion", [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(splitmix64(9001));
        for (int i = 0; i < 1000; ++i) {
            GroundSet x(1 + static_cast<int>(uniform_below(rng, 5)));
            GroundSet u(1 + static_cast<int>(uniform_below(rng, 4)));
            SigmaAlgebra a{sample_partition(x, rng)};
            SigmaAlgebra f{sample_partition(u, rng)};
            SigmaAlgebra g{sample_partition(u, rng)};
            DistributivityReport rep = distributivity_report(a, f, g);
            ++shared.rnd_total;
            if (rep.inclusion_ok) ++shared.rnd_incl;
            if (rep.equivalence_ok) ++shared.rnd_equiv;
        }
        int total = shared.exh_total + shared.rnd_total;
        int incl = shared.exh_incl + shared.rnd_incl;
        bool ok = total == 1240 && incl == total;
        return {ok, ratio(incl, total) + " (240 exhaustive + 1000 random)"};
    });
}

Item item_atom_criterion(const Shared& shared) {
    return timed(3, "atom criterion equivalence", [&]() -> std::pair<bool, std::string> {
        int total = shared.exh_total + shared.rnd_total;
        int ok_count = shared.exh_equiv + shared.rnd_equiv;
        return {total == 1240 && ok_count == total, ratio(ok_count, total)};
    });
}

Item item_lattice_failure() {
    return timed(4, "lattice identity failure", [&]() -> std::pair<bool, std::string> {
        auto started = std::chrono::steady_clock::now();
        dsl::Script script = dsl::parse(lattice_script());
        dsl::MineOptions at2;
        at2.max_ground = 2;
        dsl::MineResult r2 = dsl::mine_check(script, 0, at2);
        bool none_at_2 = !r2.counterexample && r2.certificate &&
                         r2.certificate->assignments_checked == 9;
        dsl::MineOptions at3;
        at3.max_ground = 3;
        dsl::MineResult r3 = dsl::mine_check(script, 0, at3);
        bool found_at_3 = r3.counterexample.has_value();
        bool reverified = false;
        bool rank_ok = false;
        if (found_at_3) {
            const auto& ce = *r3.counterexample;
            rank_ok = ce.rank == 47 && ce.sizes.at("U") == 3;
            dsl::Assignment assignment;
            for (const auto& [name, part] : ce.assignment)
                assignment.emplace(name, SigmaAlgebra(part));
            reverified = !dsl::holds(script.checks[0], assignment, ce.sizes);
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              started)
                        .count();
        bool ok = none_at_2 && found_at_3 && reverified && rank_ok && ms < 1000.0;
        std::string detail = "none at size<=2 (9 assignments); ";
        detail += found_at_3
                      ? "counterexample at size 3, rank " +
                            std::to_string(r3.counterexample->rank) +
                            (reverified ? ", re-verified" : ", re-verification FAILED")
                      : "no counterexample at size 3";
        return {ok, detail};
    });
}

Item item_sup_distributivity() {
    return timed(5, "sup-distributivity", [&]() -> std::pair<bool, std::string> {
        dsl::Script script = dsl::parse(sup_distributivity_script());
        dsl::MineOptions at3;
        at3.max_ground = 3;
        dsl::MineResult r = dsl::mine_check(script, 0, at3);
        bool ok = !r.counterexample && r.certificate &&
                  r.certificate->assignments_checked == 240;
        return {ok, r.counterexample
                        ? "unexpected counterexample at rank " +
                              std::to_string(r.counterexample->rank)
                        : std::to_string(r.certificate->assignments_checked) +
                              " assignments, no violation"};
    });
}

Item item_product_form() {
    return timed(6, "product-form factorization", [&]() -> std::pair<bool, std::string> {
        int round_trips = 0, round_trip_ok = 0;
        for (int nx = 1; nx <= 3; ++nx)
            for (int nu = 1; nu <= 3; ++nu) {
                ProductSpace ps{GroundSet(nx), GroundSet(nu)};
                for (const auto& a : all_sigma_algebras(nx))
                    for (const auto& f : all_sigma_algebras(nu)) {
                        ++round_trips;
                        auto factored = product_form(ps, product(a, f));
                        if (factored && factored->first == a && factored->second == f)
                            ++round_trip_ok;
                    }
            }
        // the diagonal of the 2x2 product generates a sigma-algebra with no
        // product representation at all
        ProductSpace sq{GroundSet(2), GroundSet(2)};
        Subset diag = diagonal(sq);
        SigmaAlgebra h = generate(sq.total(), std::vector<Subset>{diag});
        bool rejected = !product_form(sq, h).has_value();
        int candidates = 0, matching = 0;
        for (const auto& a0 : all_sigma_algebras(2))
            for (const auto& e : all_sigma_algebras(2)) {
                ++candidates;
                if (product(a0, e) == h) ++matching;
            }
        bool ok = round_trips == 64 && round_trip_ok == 64 && rejected && matching == 0;
        return {ok, ratio(round_trip_ok, round_trips) + " round trips; diagonal rejected, " +
                        std::to_string(matching) + "/" + std::to_string(candidates) +
                        " candidate factorizations"};
    });
}

Item item_oracle_equivalence() {
    return timed(7, "meet/join closure-oracle agreement", [&]() -> std::pair<bool, std::string> {
        int pairs = 0, meet_ok = 0, join_ok = 0;
        for (int n = 1; n <= 4; ++n) {
            auto algebras = all_sigma_algebras(n);
            std::vector<Family> families;
            families.reserve(algebras.size());
            for (const auto& s : algebras) families.push_back(family_of(s));
            for (std::size_t i = 0; i < algebras.size(); ++i)
                for (std::size_t j = 0; j < algebras.size(); ++j) {
                    ++pairs;
                    Family fm = oracle_meet(families[i], families[j]);
                    Family fj = oracle_join(families[i], families[j]);
                    if (same_atom_set(oracle_atoms(fm),
                                      atom_bits(meet(algebras[i], algebras[j]))))
                        ++meet_ok;
                    if (same_atom_set(oracle_atoms(fj),
                                      atom_bits(join(algebras[i], algebras[j]))))
                        ++join_ok;
                }
        }
        bool ok = pairs == 255 && meet_ok == pairs && join_ok == pairs;
        return {ok, ratio(meet_ok, pairs) + " meets, " + ratio(join_ok, pairs) + " joins"};
    });
}

Item item_diagonal_criterion() {
    return timed(8, "diagonal criterion", [&]() -> std::pair<bool, std::string> {
        int total = 0, ok_count = 0;
        for (int n = 1; n <= 4; ++n) {
            ProductSpace sq{GroundSet(n), GroundSet(n)};
            Subset diag = diagonal(sq);
            for (const auto& f : all_sigma_algebras(n)) {
                ++total;
                bool in_product = contains(product(f, f), diag);
                if (in_product == separates_points(f)) ++ok_count;
            }
        }
        return {total == 23 && ok_count == total, ratio(ok_count, total)};
    });
}

Item item_determinism() {
    return timed(9, "determinism", [&]() -> std::pair<bool, std::string> {
        bool bytes_ok = true;
        for (const std::string& text : {lattice_script(), sup_distributivity_script()}) {
            dsl::Script script = dsl::parse(text);
            dsl::MineOptions one;
            one.max_ground = 3;
            one.workers = 1;
            dsl::MineOptions many;
            many.max_ground = 3;
            many.workers = 4;
            auto a = report::run_mine(script, one);
            auto b = report::run_mine(script, many);
            auto c = report::run_mine(script, many);   // repeat run
            if (a.text != b.text || b.text != c.text) bytes_ok = false;
        }
        int corpus_total = 0, corpus_ok = 0;
        for (const std::string& text : parser_corpus()) {
            ++corpus_total;
            dsl::Script first = dsl::parse(text);
            dsl::Script second = dsl::parse(dsl::to_string(first));
            if (dsl::same_script(first, second)) ++corpus_ok;
        }
        bool ok = bytes_ok && corpus_total >= 20 && corpus_ok == corpus_total;
        return {ok, std::string(bytes_ok ? "mine output byte-identical across 1/4 workers"
                                         : "mine output DIFFERS across worker counts") +
                        "; " + ratio(corpus_ok, corpus_total) + " corpus round trips"};
    });
}

Item item_chain_identity() {
    return timed(10, "chain identity", [&]() -> std::pair<bool, std::string> {
        dsl::Script script = dsl::parse(chain_script());
        dsl::MineOptions at3;
        at3.max_ground = 3;
        dsl::MineResult r = dsl::mine_check(script, 0, at3);
        bool ok = !r.counterexample && r.certificate &&
                  r.certificate->assignments_checked == 216;
        return {ok, r.counterexample
                        ? "unexpected counterexample at rank " +
                              std::to_string(r.counterexample->rank)
                        : std::to_string(r.certificate->assignments_checked) +
                              " constrained assignments, no violation"};
    });
}

} // namespace

std::vector<Item> run_suite() {
    std::vector<Item> items;
    Shared shared;
    items.push_back(item_finite_distributivity(shared));
    items.push_back(item_one_sided_inclusion(shared));
    items.push_back(item_atom_criterion(shared));
    items.push_back(item_lattice_failure());
    items.push_back(item_sup_distributivity());
    items.push_back(item_product_form());
    items.push_back(item_oracle_equivalence());
    items.push_back(item_diagonal_criterion());
    items.push_back(item_determinism());
    items.push_back(item_chain_identity());
    return items;
}

bool all_passed(const std::vector<Item>& items) {
    for (const Item& item : items)
        if (!item.passed) return false;
    return true;
}

std::string format_lines(const std::vector<Item>& items) {
    std::string out;
    for (const Item& item : items) {
        out += item.passed ? "[PASS] " : "[FAIL] ";
        out += std::to_string(item.id) + " " + item.label + ": " + item.detail + "\n";
    }
    return out;
}

std::string distributivity_script() {
    return "# distributivity of product over intersection\n"
           "space X = 3\n"
           "space U = 3\n"
           "var A : X\n"
           "var F : U\n"
           "var G : U\n"
           "check (A*F)^(A*G) == A*(F^G)\n";
}

std::string lattice_script() {
    return "# join-meet lattice identity; violated on three points\n"
           "space U = 3\n"
           "var A : U\n"
           "var F : U\n"
           "var G : U\n"
           "check (A|F)^(A|G) == A|(F^G)\n";
}

std::string sup_distributivity_script() {
    return "# distributivity of product over join\n"
           "space X = 3\n"
           "space U = 3\n"
           "var A : X\n"
           "var F : U\n"
           "var G : U\n"
           "check (A*F)|(A*G) == A*(F|G)\n";
}

std::string chain_script() {
    return "# decreasing chain: meet of products vs product of the meet\n"
           "space X = 3\n"
           "space U = 3\n"
           "var A1 : X\n"
           "var A2 : X\n"
           "var A3 : X\n"
           "var F : U\n"
           "constrain A3 <= A2\n"
           "constrain A2 <= A1\n"
           "check (A1*F)^((A2*F)^(A3*F)) == (A1^(A2^A3))*F\n";
}

const std::vector<std::string>& parser_corpus() {
    static const std::vector<std::string> corpus = {
        distributivity_script(),
        lattice_script(),
        sup_distributivity_script(),
        chain_script(),
        "space X = 1\nvar A : X\ncheck A == A\n",
        "space X = 2\nvar A : X\nvar B : X\ncheck A ^ B <= A | B\n",
        "space X = 2\nspace U = 3\nvar A : X\nvar F : U\ncheck A*F == A*F\n",
        "space X = 2\nvar A : X\ncheck A*A*A == (A*A)*A\n",
        "space X = 2\nvar A : X\nvar B : X\nvar C : X\ncheck A|B^C == A|(B^C)\n",
        "space X = 2\nvar A : X\nvar B : X\nvar C : X\ncheck A^B|C == (A^B)|C\n",
        "space X = 2\nspace U = 2\nvar A : X\nvar F : U\ncheck A*F^A*F == A*F\n",
        "space X = 3\ncheck discrete(X) == discrete(X)\n",
        "space X = 3\ncheck trivial(X) <= discrete(X)\n",
        "space X = 3\nvar A : X\ncheck trivial(X) ^ A == trivial(X)\n",
        "space X = 3\nvar A : X\ncheck A | discrete(X) == discrete(X)\n",
        "space X = 3\nlet P = {{0},{1,2}} : X\ncheck P == P\n",
        "space X = 3\nlet P = {{0,1,2}} : X\ncheck P <= discrete(X)\n",
        "space X = 4\nlet H = {{0,3},{1,2}} : X\ncheck H ^ H == H\n",
        "space X = 2\nspace U = 2\nspace V = 2\nvar A : X\nvar F : U\nvar G : V\n"
        "check (A*F)*G == (A*F)*G\n",
        "space X = 2\nvar A : X\nvar B : X\nconstrain B <= A\ncheck B ^ A == B\n",
        "space X = 3\nspace U = 2\nvar A : X\nvar B : X\nvar F : U\n"
        "check (A^B)*F <= (A*F)^(B*F)\n",
        "# comments everywhere\nspace X = 2 # the space\nvar A : X # the variable\n"
        "check A == A # reflexive\n",
        "space X = 2\nspace U = 3\nvar A : X\nvar F : U\nvar G : U\n"
        "check A*(F^G) <= (A*F)^(A*G)\n",
        "space X = 2\nvar A : X\nvar B : X\ncheck A|B|A == (A|B)|A\n",
        "space X = 2\nvar A : X\nvar B : X\ncheck A^(B^A) == (A^B)^A\n",
    };
    return corpus;
}

} // namespace siglat::verify
