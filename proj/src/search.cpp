#include "hodge/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace hodge {

namespace {

i64 lcm_i64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

i64 factorial(int n)
{
    i64 f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// One linear budget sum a_i n_i = target with nonnegative coefficients,
// scaled to integers.
struct BudgetEq {
    std::vector<i64> a;
    i64 target = 0;
};

BudgetEq scale_equation(const RatVec& coeffs, const Rat& target)
{
    i64 L = target.den();
    for (const Rat& c : coeffs)
        L = lcm_i64(L, c.den());
    BudgetEq eq;
    eq.a.reserve(coeffs.size());
    for (const Rat& c : coeffs) {
        Rat s = c * Rat(L);
        eq.a.push_back(s.num());
    }
    eq.target = (target * Rat(L)).num();
    return eq;
}

// Exact-slot DFS.  Node values are assigned in an order derived from the
// lowering depth at which each node first appears in a weight; a weight's
// slot (= m minus its eigenvalue, offset per module family) becomes exact as
// soon as its support is assigned.  Pruning: per-equation budget residuals
// with suffix gcds, slot conflicts, and the covered-prefix bound (every slot
// below the least reachable undetermined slot must already be filled).
class SlotSearch {
public:
    struct Fam {
        std::vector<std::vector<i64>> lowerings;
        i64 offset = 0;
    };

    SlotSearch(int rank, std::vector<BudgetEq> eqs, std::vector<Fam> fams, i64 max_slot,
               const std::vector<std::pair<int, i64>>& pinned)
        : r_(rank), eqs_(std::move(eqs)), fams_(std::move(fams)), max_slot_(max_slot)
    {
        pin_.assign(r_, -1);
        for (auto [i, v] : pinned)
            pin_[i] = v;
        build_order();
        build_buckets();
        build_suffix_tables();
        used_.assign(static_cast<std::size_t>(max_slot_) + 1, 0);
        n_.assign(r_, 0);
    }

    std::vector<GradingElement> run()
    {
        std::size_t total = 0;
        for (const auto& f : fams_)
            total += f.lowerings.size();
        if (static_cast<i64>(total) != max_slot_ + 1)
            return {};
        results_.clear();
        pos_ub_.assign(r_, 0);
        if (place_bucket(0) && slots_feasible(0))
            descend(0);
        return std::move(results_);
    }

private:
    void build_order()
    {
        std::vector<i64> first_level(r_, INT64_MAX);
        for (const auto& f : fams_)
            for (const auto& k : f.lowerings) {
                i64 lvl = std::accumulate(k.begin(), k.end(), i64(0));
                for (int i = 0; i < r_; ++i)
                    if (k[i] > 0)
                        first_level[i] = std::min(first_level[i], lvl);
            }
        order_.resize(r_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return first_level[a] < first_level[b]; });
        depth_of_.assign(r_, 0);
        for (int d = 0; d < r_; ++d)
            depth_of_[order_[d]] = d;
    }

    void build_buckets()
    {
        // bucket[d]: weights fully determined once depth d is assigned;
        // depth r_ is never reached, -1 means determined at the root (k = 0).
        buckets_.assign(r_ + 1, {});
        for (std::size_t f = 0; f < fams_.size(); ++f)
            for (std::size_t w = 0; w < fams_[f].lowerings.size(); ++w) {
                int det = -1;
                const auto& k = fams_[f].lowerings[w];
                for (int i = 0; i < r_; ++i)
                    if (k[i] > 0)
                        det = std::max(det, depth_of_[i]);
                buckets_[det + 1].push_back({f, w});
            }
    }

    void build_suffix_tables()
    {
        // suffix_min_[e][d] = sum of coefficients at depths >= d;
        // suffix_gcd_[e][d] = gcd of those coefficients (0 if none).
        suffix_min_.assign(eqs_.size(), std::vector<i64>(r_ + 1, 0));
        suffix_gcd_.assign(eqs_.size(), std::vector<i64>(r_ + 1, 0));
        for (std::size_t e = 0; e < eqs_.size(); ++e)
            for (int d = r_ - 1; d >= 0; --d) {
                i64 a = eqs_[e].a[order_[d]];
                suffix_min_[e][d] = suffix_min_[e][d + 1] + a;
                suffix_gcd_[e][d] = std::gcd(suffix_gcd_[e][d + 1], a);
            }
        rem_.clear();
        for (const auto& eq : eqs_)
            rem_.push_back(eq.target);

        // Pairwise difference equations couple the budgets long before the
        // last variable: their coefficients vanish wherever the two weights
        // agree, so the coupling becomes exact after a few assignments.
        for (std::size_t e = 0; e + 1 < eqs_.size(); ++e)
            for (std::size_t f = e + 1; f < eqs_.size(); ++f) {
                BudgetEq diff;
                diff.a.resize(r_);
                for (int i = 0; i < r_; ++i)
                    diff.a[i] = eqs_[e].a[i] - eqs_[f].a[i];
                diff.target = eqs_[e].target - eqs_[f].target;
                diffs_.push_back(std::move(diff));
                diff_rem_.push_back(diffs_.back().target);
            }
    }

    // Interval feasibility of a (possibly signed) difference equation over
    // the unassigned suffix, with per-node upper bounds taken from the
    // all-positive primary budgets.
    bool diffs_ok(int next_depth)
    {
        for (std::size_t q = 0; q < diffs_.size(); ++q) {
            i64 lo = 0, hi = 0;
            for (int d = next_depth; d < r_; ++d) {
                int pos = order_[d];
                i64 c = diffs_[q].a[pos];
                if (c == 0)
                    continue;
                i64 ub = INT64_MAX / 2;
                for (std::size_t e = 0; e < eqs_.size(); ++e) {
                    i64 a = eqs_[e].a[pos];
                    if (a == 0)
                        continue;
                    i64 budget = rem_[e] - (suffix_min_[e][next_depth] - a);
                    ub = std::min(ub, budget / a);
                }
                if (ub < 1)
                    return false;
                if (c > 0) {
                    lo += c;
                    hi += c * ub;
                } else {
                    lo += c * ub;
                    hi += c;
                }
            }
            if (diff_rem_[q] < lo || diff_rem_[q] > hi)
                return false;
        }
        return true;
    }

    bool place_bucket(int depth)
    {
        for (auto [f, w] : buckets_[depth]) {
            const auto& k = fams_[f].lowerings[w];
            i64 slot = fams_[f].offset;
            for (int i = 0; i < r_; ++i)
                if (k[i] > 0)
                    slot += k[i] * n_[i];
            if (slot > max_slot_ || used_[slot])
                return false;
            used_[slot] = 1;
            placed_.push_back(slot);
        }
        return true;
    }

    void unplace(std::size_t placed_mark)
    {
        while (placed_.size() > placed_mark) {
            used_[placed_.back()] = 0;
            placed_.pop_back();
        }
    }

    // Exact slot-interval feasibility for the undetermined weights.  Every
    // weight must land on a distinct free slot inside [lb, ub], where lb
    // assumes unassigned node values of 1 and ub comes from the budget
    // residuals.  A heap greedy over slots in ascending order decides the
    // interval matching; an empty heap at a free slot means nothing can ever
    // fill it, a popped ub below the slot means some weight ran out of room.
    bool slots_feasible(int next_depth)
    {
        // per-position value bounds over the unassigned suffix
        for (int d = next_depth; d < r_; ++d) {
            int pos = order_[d];
            i64 ub = max_slot_ + 1;
            for (std::size_t e = 0; e < eqs_.size(); ++e) {
                i64 a = eqs_[e].a[pos];
                if (a == 0)
                    continue;
                i64 budget = rem_[e] - (suffix_min_[e][next_depth] - a);
                if (budget < a)
                    return false;
                ub = std::min(ub, budget / a);
            }
            pos_ub_[pos] = ub;
        }

        lbub_.clear();
        for (int d = next_depth + 1; d <= r_; ++d)
            for (auto [f, w] : buckets_[d]) {
                const auto& k = fams_[f].lowerings[w];
                i64 lb = fams_[f].offset, ub = fams_[f].offset;
                for (int i = 0; i < r_; ++i) {
                    if (k[i] == 0)
                        continue;
                    if (depth_of_[i] < next_depth) {
                        lb += k[i] * n_[i];
                        ub += k[i] * n_[i];
                    } else {
                        lb += k[i];
                        ub += std::min(k[i] * pos_ub_[i], max_slot_ + 1);
                    }
                }
                if (lb > max_slot_)
                    return false;
                lbub_.push_back({lb, std::min(ub, max_slot_)});
            }
        std::sort(lbub_.begin(), lbub_.end());

        heap_.clear();
        std::size_t next = 0;
        for (i64 s = 0; s <= max_slot_; ++s) {
            if (used_[s])
                continue;
            while (next < lbub_.size() && lbub_[next].first <= s)
                push_heap_ub(lbub_[next++].second);
            if (heap_.empty())
                return false; // slot s can never be filled
            i64 tightest = pop_heap_ub();
            if (tightest < s)
                return false; // that weight has no remaining slot
        }
        return true;
    }

    void push_heap_ub(i64 v)
    {
        heap_.push_back(v);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<i64>());
    }

    i64 pop_heap_ub()
    {
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<i64>());
        i64 v = heap_.back();
        heap_.pop_back();
        return v;
    }

    void descend(int depth)
    {
        if (depth == r_) {
            for (std::size_t e = 0; e < eqs_.size(); ++e)
                if (rem_[e] != 0)
                    return;
            GradingElement g;
            g.n = n_;
            results_.push_back(std::move(g));
            return;
        }
        const int pos = order_[depth];

        i64 lo = 1, hi = INT64_MAX;
        for (std::size_t e = 0; e < eqs_.size(); ++e) {
            i64 a = eqs_[e].a[pos];
            if (a == 0)
                continue;
            i64 budget = rem_[e] - (suffix_min_[e][depth] - a);
            if (budget < a)
                return;
            hi = std::min(hi, budget / a);
        }
        if (pin_[pos] >= 0) {
            if (pin_[pos] < lo || pin_[pos] > hi)
                return;
            lo = hi = pin_[pos];
        }

        for (i64 v = lo; v <= hi; ++v) {
            bool feasible = true;
            for (std::size_t e = 0; e < eqs_.size() && feasible; ++e) {
                i64 a = eqs_[e].a[pos];
                i64 rem_after = rem_[e] - a * v;
                i64 slack = rem_after - suffix_min_[e][depth + 1];
                if (slack < 0)
                    feasible = false;
                else if (depth + 1 == r_)
                    feasible = rem_after == 0;
                else if (suffix_gcd_[e][depth + 1] > 0 &&
                         slack % suffix_gcd_[e][depth + 1] != 0)
                    feasible = false;
                else if (suffix_gcd_[e][depth + 1] == 0 && rem_after != 0)
                    feasible = false;
            }
            if (!feasible)
                continue;

            n_[pos] = v;
            for (std::size_t e = 0; e < eqs_.size(); ++e)
                rem_[e] -= eqs_[e].a[pos] * v;
            for (std::size_t q = 0; q < diffs_.size(); ++q)
                diff_rem_[q] -= diffs_[q].a[pos] * v;
            std::size_t mark = placed_.size();

            if (diffs_ok(depth + 1) && place_bucket(depth + 1) && slots_feasible(depth + 1))
                descend(depth + 1);

            unplace(mark);
            for (std::size_t e = 0; e < eqs_.size(); ++e)
                rem_[e] += eqs_[e].a[pos] * v;
            for (std::size_t q = 0; q < diffs_.size(); ++q)
                diff_rem_[q] += diffs_[q].a[pos] * v;
            n_[pos] = 0;
        }
    }

    int r_;
    std::vector<BudgetEq> eqs_;
    std::vector<Fam> fams_;
    i64 max_slot_;
    std::vector<i64> pin_;

    std::vector<int> order_, depth_of_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> buckets_;
    std::vector<std::vector<i64>> suffix_min_, suffix_gcd_;

    std::vector<i64> n_, rem_;
    std::vector<BudgetEq> diffs_;
    std::vector<i64> diff_rem_;
    std::vector<char> used_;
    std::vector<i64> placed_;
    std::vector<i64> pos_ub_;
    std::vector<std::pair<i64, i64>> lbub_;
    std::vector<i64> heap_;
    std::vector<GradingElement> results_;
};

std::vector<std::vector<i64>> lowerings_of(const WeightSystem& ws)
{
    std::vector<std::vector<i64>> out;
    out.reserve(ws.entries().size());
    for (const auto& e : ws.entries())
        out.push_back(e.lowering);
    return out;
}

// Candidates for one orientation: the achiever's highest weight evaluates to
// target_m.  For a pair the offset delta = m - m* is scanned; each candidate
// determines its own delta, so the union over delta is disjoint.
std::vector<GradingElement> pruned_candidates(const RootSystem& rs, const WeightSystem& achiever,
                                              const WeightSystem* other, HalfInt target_m,
                                              const std::vector<std::pair<int, i64>>& pinned)
{
    const int r = rs.rank();
    const Rat m_rat = target_m.to_rat();
    const RatVec& ca = achiever.highest().root_coords;

    if (!is_weight_multiplicity_free(achiever) || (other && !is_weight_multiplicity_free(*other)))
        return {};

    std::vector<GradingElement> out;
    if (!other) {
        std::vector<BudgetEq> eqs{scale_equation(ca, m_rat)};
        std::vector<SlotSearch::Fam> fams{{lowerings_of(achiever), 0}};
        SlotSearch s(r, std::move(eqs), std::move(fams), target_m.twice, pinned);
        out = s.run();
    } else {
        const RatVec& cb = other->highest().root_coords;
        Rat cb_min;
        for (const Rat& c : cb)
            cb_min += c;
        for (i64 delta = 1;; ++delta) {
            Rat vb = m_rat - Rat(delta);
            if (vb < cb_min)
                break;
            std::vector<BudgetEq> eqs{scale_equation(ca, m_rat), scale_equation(cb, vb)};
            std::vector<SlotSearch::Fam> fams{{lowerings_of(achiever), 0},
                                              {lowerings_of(*other), delta}};
            SlotSearch s(r, std::move(eqs), std::move(fams), target_m.twice, pinned);
            auto found = s.run();
            out.insert(out.end(), found.begin(), found.end());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SearchProblem make_search_problem(ModuleSpec spec, bool canonicalize)
{
    i64 dim_v = spec.complex_dimension();
    SearchProblem p{std::move(spec), HalfInt(dim_v - 1), canonicalize};
    return p;
}

FilterOutcome type_a_filters(const RootSystem& rs, const Weight& mu, Pairing pairing)
{
    if (rs.type().family != Family::A)
        throw config_error("type_a_filters requires family A");
    const int r = rs.rank();
    FilterOutcome out;

    if ((r + 1) % 2 != 0) {
        out.pass = false;
        out.lemma = "L:r+1";
        return out;
    }

    int support = -1;
    int support_count = 0;
    for (int i = 0; i < r; ++i)
        if (mu.dynkin[i] > 0) {
            support = i;
            ++support_count;
        }

    if (support_count == 1) {
        const int k = support + 1; // 1-based node
        const i64 p = mu.dynkin[support];

        if ((k == 1 || k == r) && r > 1) {
            // symmetric powers of the (dual) standard representation
            if (factorial(r + 1) % (2 * p) != 0 || (2 * p) % (r + 1) == 0 ||
                (p % 2 == 0 && (r + 1) % 4 == 2)) {
                out.pass = false;
                out.lemma = "L:Ar_pw1";
                return out;
            }
        } else if (p == 1 && k > 1 && k < r) {
            // wedge powers; even non-self-dual ones need r+1 = 0 mod 4
            bool self_dual = 2 * k == r + 1;
            if (!self_dual && k % 2 == 0 && (r + 1) % 4 != 0) {
                out.pass = false;
                out.lemma = "L:Ar_w2k";
                return out;
            }
        }

        if (pairing == Pairing::SelfDualSingle)
            out.pinned.push_back({support, 1}); // L:iv(a)
    }
    return out;
}

void enumerate_gradings(const SearchProblem& p,
                        const std::function<bool(const GradingElement&)>& yield)
{
    const RootSystem& rs = p.spec.rs();
    const int r = rs.rank();

    auto check_coords = [&](const Weight& w) {
        for (const Rat& c : w.root_coords)
            if (!(Rat(0) < c))
                throw config_error("enumeration requires strictly positive root coordinates "
                                   "(dominant nonzero highest weight)");
    };
    check_coords(p.spec.mu());

    const Rat m_rat = p.target_m.to_rat();

    // plain lexicographic DFS over one budget equation
    auto emit_orientation = [&](const RatVec& coords, bool skip_primary) -> bool {
        BudgetEq eq = scale_equation(coords, m_rat);
        std::vector<i64> suffix_min(r + 1, 0), suffix_gcd(r + 1, 0);
        for (int i = r - 1; i >= 0; --i) {
            suffix_min[i] = suffix_min[i + 1] + eq.a[i];
            suffix_gcd[i] = std::gcd(suffix_gcd[i + 1], eq.a[i]);
        }
        std::vector<i64> n(r, 0);
        bool keep_going = true;
        auto rec = [&](auto&& self, int i, i64 rem) -> void {
            if (!keep_going)
                return;
            if (i == r) {
                if (rem != 0)
                    return;
                GradingElement g;
                g.n = n;
                if (skip_primary) {
                    // already emitted under the primary orientation
                    if (eigenvalue(rs, p.spec.mu(), g) == p.target_m)
                        return;
                }
                if (!yield(g))
                    keep_going = false;
                return;
            }
            i64 budget = rem - suffix_min[i + 1];
            for (i64 v = 1; v * eq.a[i] <= budget; ++v) {
                i64 rem_after = rem - v * eq.a[i];
                i64 slack = rem_after - suffix_min[i + 1];
                if (i + 1 < r) {
                    if (suffix_gcd[i + 1] > 0 && slack % suffix_gcd[i + 1] != 0)
                        continue;
                } else if (rem_after != 0) {
                    continue;
                }
                n[i] = v;
                self(self, i + 1, rem_after);
                n[i] = 0;
                if (!keep_going)
                    return;
            }
        };
        rec(rec, 0, eq.target);
        return keep_going;
    };

    if (!emit_orientation(p.spec.mu().root_coords, false))
        return;
    if (p.spec.pairing() == Pairing::ComplexPair && !p.canonicalize) {
        Weight dual = p.spec.mu_dual();
        check_coords(dual);
        emit_orientation(dual.root_coords, true);
    }
}

namespace {

GradingElement apply_duality(const RootSystem& rs, const GradingElement& g)
{
    GradingElement out;
    out.n.assign(g.n.size(), 0);
    for (std::size_t i = 0; i < g.n.size(); ++i)
        out.n[rs.duality()[i]] = g.n[i];
    return out;
}

std::vector<Solution> search_entry(std::shared_ptr<const RootSystem> rs,
                                   const MFCatalogEntry& entry, const SearchOptions& opts,
                                   WeightStore& store)
{
    const Pairing pairing =
        entry.self_dual ? Pairing::SelfDualSingle : Pairing::ComplexPair;
    ModuleSpec spec = ModuleSpec::make(rs, entry.highest_weight, pairing);

    std::vector<std::pair<int, i64>> pinned;
    if (rs->type().family == Family::A) {
        FilterOutcome f = type_a_filters(*rs, entry.highest_weight, pairing);
        if (!f.pass)
            return {};
        pinned = std::move(f.pinned);
    }

    const HalfInt target_m(spec.complex_dimension() - 1);

    // Orientations: the catalog weight achieving m, plus the dual orientation
    // when not canonicalizing.
    struct Orientation {
        Weight achiever;
        Weight other;
        bool swapped;
    };
    std::vector<Orientation> orientations;
    orientations.push_back({spec.mu(), spec.mu_dual(), false});
    if (pairing == Pairing::ComplexPair && !opts.canonicalize)
        orientations.push_back({spec.mu_dual(), spec.mu(), true});

    std::vector<Solution> solutions;
    for (const auto& ori : orientations) {
        // cheap Diophantine feasibility before any weight system is built
        BudgetEq eq = scale_equation(ori.achiever.root_coords, target_m.to_rat());
        i64 min_sum = 0, g = 0;
        for (i64 a : eq.a) {
            min_sum += a;
            g = std::gcd(g, a);
        }
        if (eq.target < min_sum || (g > 0 && (eq.target - min_sum) % g != 0))
            continue;

        auto ws_a = store.get(rs, ori.achiever);
        std::shared_ptr<const WeightSystem> ws_b;
        if (pairing == Pairing::ComplexPair)
            ws_b = store.get(rs, ori.other);

        auto candidates = pruned_candidates(*rs, *ws_a, ws_b.get(), target_m, pinned);
        auto ws_mu = ori.swapped ? ws_b : ws_a; // weight system of the catalog's mu
        for (const auto& n : candidates) {
            Verdict v = is_principal(spec, n, *ws_mu);
            if (!v.principal)
                continue;
            Solution s;
            s.type = rs->type();
            s.label = entry.label;
            s.mu = entry.highest_weight;
            s.n = n;
            s.structure = rcq_structure(spec, n);
            s.m = target_m;
            solutions.push_back(std::move(s));
        }
    }
    return solutions;
}

} // namespace

std::vector<Solution> search_principal(std::shared_ptr<const RootSystem> rs,
                                       const std::vector<MFCatalogEntry>& targets,
                                       const SearchOptions& opts)
{
    std::unique_ptr<WeightStore> local_store;
    WeightStore* store = opts.store;
    if (!store) {
        local_store = std::make_unique<WeightStore>(opts.limits);
        store = local_store.get();
    }

    std::vector<Solution> all;
    std::mutex out_mutex;
    int threads = opts.threads;
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(targets.size())));

    if (threads <= 1 || targets.size() <= 1) {
        for (const auto& entry : targets) {
            auto sols = search_entry(rs, entry, opts, *store);
            all.insert(all.end(), sols.begin(), sols.end());
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= targets.size())
                    return;
                auto sols = search_entry(rs, targets[i], opts, *store);
                std::lock_guard<std::mutex> lock(out_mutex);
                all.insert(all.end(), sols.begin(), sols.end());
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    if (opts.dedupe) {
        std::vector<Solution> kept;
        for (const auto& s : all) {
            Weight dual_mu = rs->dual_weight(s.mu);
            GradingElement dual_n = apply_duality(*rs, s.n);
            auto image = std::make_pair(dual_mu.dynkin, dual_n.n);
            auto self = std::make_pair(s.mu.dynkin, s.n.n);
            if (self <= image)
                kept.push_back(s);
            else {
                // keep only if the image is not itself a listed solution
                bool image_listed = std::any_of(all.begin(), all.end(), [&](const Solution& t) {
                    return t.mu.dynkin == image.first && t.n.n == image.second;
                });
                if (!image_listed)
                    kept.push_back(s);
            }
        }
        all = std::move(kept);
    }
    return all;
}

} // namespace hodge
