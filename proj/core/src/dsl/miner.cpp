#include "siglat/dsl/miner.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace siglat::dsl {

namespace {

constexpr std::uint64_t kNotFound = ~std::uint64_t{0};
constexpr std::uint64_t kChunk = 64;

struct SearchPlan {
    const Script* script;
    const CheckDecl* check;
    std::vector<std::string> searched_spaces;   // declaration order
    std::vector<const VarDecl*> free_vars;      // declaration order
    SpaceSizes pinned_sizes;                    // spaces carrying a let
    Assignment lets;                            // fixed values
    std::vector<const ConstrainDecl*> constraints;
};

SearchPlan make_plan(const Script& script, std::size_t check_index) {
    if (check_index >= script.checks.size())
        throw std::invalid_argument("check index out of range");
    SearchPlan plan;
    plan.script = &script;
    plan.check = &script.checks[check_index];
    std::vector<std::string> let_spaces;
    for (const auto& l : script.lets) let_spaces.push_back(l.space);
    for (const auto& s : script.spaces) {
        if (std::find(let_spaces.begin(), let_spaces.end(), s.name) != let_spaces.end())
            plan.pinned_sizes[s.name] = s.size;
        else
            plan.searched_spaces.push_back(s.name);
    }
    for (const auto& v : script.vars) plan.free_vars.push_back(&v);
    plan.lets = let_assignment(script, declared_sizes(script));
    for (const auto& c : script.constraints) plan.constraints.push_back(&c);
    return plan;
}

// Largest ground set any sub-expression can reach when every searched space
// is at the bound; products multiply factor sizes.
std::uint64_t worst_case_size(const Expr& expr, const SearchPlan& plan, int max_ground,
                              const TypedScript& typed) {
    if (const auto* b = std::get_if<Binary>(&expr.node)) {
        std::uint64_t l = worst_case_size(*b->lhs, plan, max_ground, typed);
        std::uint64_t r = worst_case_size(*b->rhs, plan, max_ground, typed);
        return b->op == BinOp::Product ? l * r : std::max(l, r);
    }
    std::string space;
    if (const auto* v = std::get_if<VarRef>(&expr.node)) space = typed.var_spaces.at(v->name);
    else space = std::get<ConstAlg>(expr.node).space;
    auto pinned = plan.pinned_sizes.find(space);
    if (pinned != plan.pinned_sizes.end()) return static_cast<std::uint64_t>(pinned->second);
    return static_cast<std::uint64_t>(max_ground);
}

// Size vectors over the searched spaces, ordered by total size then
// lexicographically, so the first counterexample is minimal in size.
std::vector<std::vector<int>> size_vectors(std::size_t count, int max_ground) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(count, 1);
    if (count == 0) return {v};
    while (true) {
        out.push_back(v);
        std::size_t i = count;
        while (i > 0 && v[i - 1] == max_ground) v[--i] = 1;
        if (i == 0) break;
        ++v[i - 1];
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         int sa = std::accumulate(a.begin(), a.end(), 0);
                         int sb = std::accumulate(b.begin(), b.end(), 0);
                         if (sa != sb) return sa < sb;
                         return a < b;
                     });
    return out;
}

// One size vector's worth of search state.
struct Stage {
    SpaceSizes sizes;                                    // searched + pinned
    std::vector<const std::vector<Partition>*> domains;  // per free var
    std::uint64_t total;                                 // product of domain sizes
};

class Searcher {
public:
    Searcher(SearchPlan plan, const MineOptions& options)
        : plan_(std::move(plan)), options_(options) {
        workers_ = options.workers > 0
                       ? options.workers
                       : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }

    MineResult run_exhaustive() {
        for (int n = 1; n <= options_.max_ground; ++n)
            domain_cache_[n] = enumerate_partitions(n);
        // free variables may live on a pinned space whose size is outside 1..max_ground
        for (const VarDecl* v : plan_.free_vars) {
            auto pinned = plan_.pinned_sizes.find(v->space);
            if (pinned != plan_.pinned_sizes.end() && !domain_cache_.count(pinned->second))
                domain_cache_[pinned->second] = enumerate_partitions(pinned->second);
        }

        std::uint64_t rank_offset = 0;
        std::uint64_t checked_total = 0;
        for (const auto& sv : size_vectors(plan_.searched_spaces.size(), options_.max_ground)) {
            Stage stage = make_stage(sv);
            auto [local_best, checked] = scan_stage(stage);
            checked_total += checked;
            if (local_best != kNotFound)
                return found(stage, local_best, rank_offset + local_best);
            rank_offset += stage.total;
        }
        return absent(checked_total);
    }

    MineResult run_random() {
        std::uint64_t seed = *options_.seed;
        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> best{kNotFound};
        std::atomic<std::uint64_t> checked{0};
        auto work = [&] {
            std::uint64_t local_checked = 0;
            for (;;) {
                std::uint64_t start = next.fetch_add(kChunk);
                if (start >= options_.limit || start > best.load()) break;
                std::uint64_t end = std::min(options_.limit, start + kChunk);
                for (std::uint64_t t = start; t < end && t < best.load(); ++t) {
                    auto [sizes, assignment] = sample_trial(seed, t);
                    if (!passes_constraints(assignment)) continue;
                    ++local_checked;
                    if (!holds(*plan_.check, assignment, sizes)) update_min(best, t);
                }
            }
            checked.fetch_add(local_checked);
        };
        run_workers(options_.limit, work);
        std::uint64_t t = best.load();
        if (t == kNotFound) {
            Certificate cert{SearchMode::Random, options_.max_ground, checked.load(), seed,
                             options_.limit};
            return MineResult{std::nullopt, cert};
        }
        auto [sizes, assignment] = sample_trial(seed, t);
        return package(sizes, assignment, t);
    }

private:
    Stage make_stage(const std::vector<int>& sv) const {
        Stage stage;
        stage.sizes = plan_.pinned_sizes;
        for (std::size_t i = 0; i < plan_.searched_spaces.size(); ++i)
            stage.sizes[plan_.searched_spaces[i]] = sv[i];
        stage.total = 1;
        for (const VarDecl* v : plan_.free_vars) {
            const auto& domain = domain_cache_.at(stage.sizes.at(v->space));
            stage.domains.push_back(&domain);
            if (__builtin_mul_overflow(stage.total, domain.size(), &stage.total))
                throw std::invalid_argument("search space too large to enumerate");
        }
        return stage;
    }

    Assignment decode(const Stage& stage, std::uint64_t index) const {
        Assignment assignment = plan_.lets;
        // mixed radix, first declared variable most significant
        for (std::size_t i = plan_.free_vars.size(); i-- > 0;) {
            const auto& domain = *stage.domains[i];
            std::uint64_t d = index % domain.size();
            index /= domain.size();
            assignment.emplace(plan_.free_vars[i]->name, SigmaAlgebra(domain[d]));
        }
        return assignment;
    }

    bool passes_constraints(const Assignment& assignment) const {
        for (const ConstrainDecl* c : plan_.constraints) {
            auto fi = assignment.find(c->finer);
            auto ci = assignment.find(c->coarser);
            if (fi == assignment.end() || ci == assignment.end()) continue;
            if (!is_sub(fi->second, ci->second)) return false;
        }
        return true;
    }

    // Returns (smallest violating index or kNotFound, assignments evaluated).
    // Workers claim chunks in increasing order and stop once no chunk can
    // contain a smaller index than the best violation seen.
    std::pair<std::uint64_t, std::uint64_t> scan_stage(const Stage& stage) {
        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> best{kNotFound};
        std::atomic<std::uint64_t> checked{0};
        auto work = [&] {
            std::uint64_t local_checked = 0;
            for (;;) {
                std::uint64_t start = next.fetch_add(kChunk);
                if (start >= stage.total || start > best.load()) break;
                std::uint64_t end = std::min(stage.total, start + kChunk);
                for (std::uint64_t i = start; i < end && i < best.load(); ++i) {
                    Assignment assignment = decode(stage, i);
                    if (!passes_constraints(assignment)) continue;
                    ++local_checked;
                    if (!holds(*plan_.check, assignment, stage.sizes)) update_min(best, i);
                }
            }
            checked.fetch_add(local_checked);
        };
        run_workers(stage.total, work);
        return {best.load(), checked.load()};
    }

    // Small searches run inline; spawning threads costs more than the scan.
    template <typename Fn>
    void run_workers(std::uint64_t total, Fn&& work) {
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto guarded = [&] {
            try {
                work();
            } catch (...) {
                std::scoped_lock lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        if (workers_ == 1 || total <= kChunk) {
            guarded();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers_);
            for (int w = 0; w < workers_; ++w) pool.emplace_back(guarded);
            for (auto& t : pool) t.join();
        }
        if (failure) std::rethrow_exception(failure);
    }

    static void update_min(std::atomic<std::uint64_t>& best, std::uint64_t value) {
        std::uint64_t cur = best.load();
        while (value < cur && !best.compare_exchange_weak(cur, value)) {
        }
    }

    std::pair<SpaceSizes, Assignment> sample_trial(std::uint64_t seed, std::uint64_t trial) const {
        std::mt19937_64 rng(splitmix64(seed + trial + 1));
        SpaceSizes sizes = plan_.pinned_sizes;
        for (const auto& name : plan_.searched_spaces)
            sizes[name] = 1 + static_cast<int>(uniform_below(rng, options_.max_ground));
        Assignment assignment = plan_.lets;
        for (const VarDecl* v : plan_.free_vars)
            assignment.emplace(v->name,
                               SigmaAlgebra(sample_partition(GroundSet(sizes.at(v->space)), rng)));
        return {std::move(sizes), std::move(assignment)};
    }

    MineResult found(const Stage& stage, std::uint64_t index, std::uint64_t rank) const {
        return package(stage.sizes, decode(stage, index), rank);
    }

    MineResult package(const SpaceSizes& sizes, const Assignment& assignment,
                       std::uint64_t rank) const {
        Counterexample ce{sizes,
                          {},
                          plan_.check->rel,
                          evaluate(*plan_.check->lhs, assignment, sizes).atoms(),
                          evaluate(*plan_.check->rhs, assignment, sizes).atoms(),
                          rank};
        for (const auto& [name, alg] : assignment) ce.assignment.emplace(name, alg.atoms());
        return MineResult{std::move(ce), std::nullopt};
    }

    MineResult absent(std::uint64_t checked) const {
        Certificate cert{SearchMode::Exhaustive, options_.max_ground, checked};
        return MineResult{std::nullopt, cert};
    }

    SearchPlan plan_;
    const MineOptions& options_;
    int workers_;
    std::map<int, std::vector<Partition>> domain_cache_;
};

void validate(const MineOptions& options) {
    if (options.max_ground < 1)
        throw std::invalid_argument("mine: ground size bound must be at least 1");
    if (options.limit == 0)
        throw std::invalid_argument("mine: search budget of zero rejected");
    if (options.mode == SearchMode::Exhaustive && options.max_ground > kMaxEnumerationSize)
        throw std::invalid_argument("mine: exhaustive bound exceeds " +
                                    std::to_string(kMaxEnumerationSize));
    if (options.mode == SearchMode::Random) {
        if (!options.seed) throw std::invalid_argument("mine: random mode requires a seed");
        if (options.max_ground > kMaxSampleSize)
            throw std::invalid_argument("mine: random bound exceeds " +
                                        std::to_string(kMaxSampleSize));
    }
}

} // namespace

MineResult mine_check(const Script& script, std::size_t check_index, const MineOptions& options) {
    validate(options);
    TypedScript typed = typecheck(script);
    SearchPlan plan = make_plan(script, check_index);
    for (const Expr* side : {plan.check->lhs.get(), plan.check->rhs.get()}) {
        std::uint64_t worst = worst_case_size(*side, plan, options.max_ground, typed);
        if (worst > static_cast<std::uint64_t>(kMaxGroundSize))
            throw std::invalid_argument(
                "mine: bound " + std::to_string(options.max_ground) +
                " would need product spaces of " + std::to_string(worst) +
                " points; the limit is " + std::to_string(kMaxGroundSize));
    }
    Searcher searcher(std::move(plan), options);
    return options.mode == SearchMode::Exhaustive ? searcher.run_exhaustive()
                                                  : searcher.run_random();
}

std::vector<MineResult> mine(const Script& script, const MineOptions& options) {
    std::vector<MineResult> out;
    out.reserve(script.checks.size());
    for (std::size_t i = 0; i < script.checks.size(); ++i)
        out.push_back(mine_check(script, i, options));
    return out;
}

} // namespace siglat::dsl
