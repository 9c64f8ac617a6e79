#include "hodge/weight_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hodge {

namespace {

i64 lcm_i64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

// Universal denominator: every fundamental weight (hence every integral
// weight and rho) has root coordinates with denominator dividing this.
i64 lattice_denominator(const RootSystem& rs)
{
    i64 f = 1;
    for (const auto& row : rs.cartan_inv())
        for (const Rat& q : row)
            f = lcm_i64(f, q.den());
    return f;
}

std::vector<i64> scale_coords(const RatVec& v, i64 f)
{
    std::vector<i64> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(f);
        if (!s.is_integer())
            throw std::logic_error("coordinate scaling failed");
        out[i] = s.num();
    }
    return out;
}

} // namespace

i64 weyl_dim(const RootSystem& rs, const Weight& mu)
{
    if (!mu.is_dominant())
        throw config_error("weyl_dim requires a dominant weight");

    const int r = rs.rank();
    // <mu+rho, alpha^vee> / <rho, alpha^vee>, both positive integers.
    std::vector<i64> nums, dens;
    nums.reserve(rs.positive_roots().size());
    dens.reserve(rs.positive_roots().size());
    for (const auto& root : rs.positive_roots()) {
        // alpha^vee in simple-coroot coordinates: d_i * m_i / d_alpha, and the
        // pairing <lam, alpha^vee> = sum (dyn_i + 1) d_i m_i / d_alpha.
        i128 num = 0, den = 0;
        i64 d_alpha = 0;
        RatVec root_rat(r);
        for (int i = 0; i < r; ++i)
            root_rat[i] = Rat(root[i]);
        Rat norm = rs.form(root_rat, root_rat); // = 2 * d_alpha
        if (!norm.is_integer() || norm.num() % 2 != 0)
            throw std::logic_error("root norm is not an even integer");
        d_alpha = norm.num() / 2;
        for (int i = 0; i < r; ++i) {
            i64 w = rs.symmetrizer()[i] * root[i];
            num += i128(mu.dynkin[i] + 1) * w;
            den += i128(1) * w;
        }
        if (num % d_alpha != 0 || den % d_alpha != 0)
            throw std::logic_error("coroot pairing is not integral");
        nums.push_back(detail::narrow128(num / d_alpha, "weyl_dim"));
        dens.push_back(detail::narrow128(den / d_alpha, "weyl_dim"));
    }

    const i128 guard = i128(1) << 100;
    i128 acc = 1;
    for (i64 n : nums) {
        i64 m = n;
        for (i64& d : dens) {
            if (d == 1 || m == 1)
                continue;
            i64 g = std::gcd(m, d);
            m /= g;
            d /= g;
        }
        acc *= m;
        if (acc >= guard) {
            for (i64& d : dens) {
                if (d == 1)
                    continue;
                i128 g = detail::gcd128(acc, d);
                acc /= g;
                d /= static_cast<i64>(g);
            }
            if (acc >= guard)
                throw resource_error("weyl_dim overflow: dimension does not fit in 64 bits");
        }
    }
    for (i64 d : dens)
        if (d != 1) {
            if (acc % d != 0)
                throw std::logic_error("weyl_dim: non-integral product");
            acc /= d;
        }
    if (acc > i128(INT64_MAX))
        throw resource_error("weyl_dim overflow: dimension does not fit in 64 bits");
    return static_cast<i64>(acc);
}

WeightSystem::WeightSystem(Weight highest, std::vector<WeightEntry> entries)
    : highest_(std::move(highest)), entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(), [](const WeightEntry& a, const WeightEntry& b) {
        i64 la = a.level(), lb = b.level();
        if (la != lb)
            return la < lb;
        return a.lowering < b.lowering;
    });
    index_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        dimension_ += entries_[i].mult;
        index_.emplace(entries_[i].dynkin, i);
    }
}

bool WeightSystem::contains(const std::vector<i64>& dynkin) const
{
    return index_.find(dynkin) != index_.end();
}

i64 WeightSystem::multiplicity(const std::vector<i64>& dynkin) const
{
    auto it = index_.find(dynkin);
    return it == index_.end() ? 0 : entries_[it->second].mult;
}

namespace {

struct Builder {
    const RootSystem& rs;
    int r;
    std::vector<std::vector<i64>> simple_dynkin; // column i: dynkin of sigma_i

    std::vector<WeightEntry> entries;
    std::unordered_map<std::vector<i64>, std::size_t, VecHash> index;

    explicit Builder(const RootSystem& rs_) : rs(rs_), r(rs_.rank())
    {
        simple_dynkin.resize(r, std::vector<i64>(r));
        for (int i = 0; i < r; ++i) {
            std::vector<i64> e(r, 0);
            e[i] = 1;
            simple_dynkin[i] = rs.dynkin_of_root(e);
        }
    }

    // Saturate the weight set under simple-root lowering, level by level.
    // lambda - sigma_i is a weight iff (steps up the sigma_i string) +
    // <lambda, sigma_i^vee> >= 1.
    void generate(const Weight& mu)
    {
        WeightEntry top;
        top.lowering.assign(r, 0);
        top.dynkin = mu.dynkin;
        entries.push_back(top);
        index.emplace(top.dynkin, 0);

        std::vector<std::size_t> frontier{0};
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (std::size_t idx : frontier) {
                for (int i = 0; i < r; ++i) {
                    const auto lam_dyn = entries[idx].dynkin; // copy: entries may grow
                    i64 up = 0;
                    std::vector<i64> probe = lam_dyn;
                    for (;;) {
                        for (int j = 0; j < r; ++j)
                            probe[j] += simple_dynkin[i][j];
                        if (index.find(probe) == index.end())
                            break;
                        ++up;
                    }
                    if (up + lam_dyn[i] < 1)
                        continue;
                    std::vector<i64> down = lam_dyn;
                    for (int j = 0; j < r; ++j)
                        down[j] -= simple_dynkin[i][j];
                    if (index.find(down) != index.end())
                        continue;
                    WeightEntry e;
                    e.lowering = entries[idx].lowering;
                    e.lowering[i] += 1;
                    e.dynkin = down;
                    index.emplace(down, entries.size());
                    next.push_back(entries.size());
                    entries.push_back(std::move(e));
                }
            }
            frontier = std::move(next);
        }
    }

    // Freudenthal multiplicities over a single level-ordered pass.  Entries
    // created by generate() are already grouped by level.
    void multiplicities(const Weight& mu)
    {
        const i64 f = lattice_denominator(rs);
        const std::vector<i64> smu = scale_coords(mu.root_coords, f);
        const std::vector<i64> srho = scale_coords(rs.weyl_vector(), f);

        // integer form matrix S[i][j] = d_j * cartan[j][i]
        std::vector<std::vector<i64>> S(r, std::vector<i64>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                S[i][j] = rs.symmetrizer()[j] * rs.cartan()[j][i];
        auto form_s = [&](const std::vector<i64>& a, const std::vector<i64>& b) {
            i128 s = 0;
            for (int i = 0; i < r; ++i) {
                if (a[i] == 0)
                    continue;
                i128 row = 0;
                for (int j = 0; j < r; ++j)
                    row += i128(S[i][j]) * b[j];
                s += i128(a[i]) * row;
            }
            return s;
        };

        auto scaled_coords_of = [&](const WeightEntry& e) {
            std::vector<i64> c(r);
            for (int i = 0; i < r; ++i)
                c[i] = smu[i] - f * e.lowering[i];
            return c;
        };

        const auto& roots = rs.positive_roots();
        std::vector<std::vector<i64>> root_dyn(roots.size());
        std::vector<std::vector<i64>> root_scaled(roots.size());
        std::vector<i128> root_norm(roots.size());
        for (std::size_t a = 0; a < roots.size(); ++a) {
            root_dyn[a] = rs.dynkin_of_root(roots[a]);
            root_scaled[a].resize(r);
            for (int i = 0; i < r; ++i)
                root_scaled[a][i] = f * roots[a][i];
            root_norm[a] = form_s(root_scaled[a], root_scaled[a]);
        }

        for (std::size_t idx = 0; idx < entries.size(); ++idx) {
            WeightEntry& e = entries[idx];
            if (idx == 0) {
                e.mult = 1;
                continue;
            }
            bool dominant = std::all_of(e.dynkin.begin(), e.dynkin.end(),
                                        [](i64 d) { return d >= 0; });
            if (!dominant) {
                e.mult = entries[index.at(dominantize(e.dynkin))].mult;
                continue;
            }

            const std::vector<i64> slam = scaled_coords_of(e);
            i128 num = 0;
            for (std::size_t a = 0; a < roots.size(); ++a) {
                i128 base = form_s(slam, root_scaled[a]);
                std::vector<i64> dyn = e.dynkin;
                for (i64 t = 1;; ++t) {
                    for (int j = 0; j < r; ++j)
                        dyn[j] += root_dyn[a][j];
                    auto it = index.find(dyn);
                    if (it == index.end())
                        break;
                    num += i128(entries[it->second].mult) * (base + i128(t) * root_norm[a]);
                }
            }
            // denom = (mu+rho,mu+rho) - (lam+rho,lam+rho) = (mu+lam+2rho, mu-lam)
            std::vector<i64> sum(r), diff(r);
            for (int i = 0; i < r; ++i) {
                sum[i] = smu[i] + slam[i] + 2 * srho[i];
                diff[i] = smu[i] - slam[i];
            }
            i128 denom = form_s(sum, diff);
            if (denom <= 0 || (2 * num) % denom != 0)
                throw std::logic_error("Freudenthal recursion produced a non-integral value");
            e.mult = detail::narrow128(2 * num / denom, "Freudenthal");
            if (e.mult <= 0)
                throw std::logic_error("Freudenthal recursion produced a non-positive value");
        }
    }

    // Reflect to the dominant chamber; the image has strictly smaller level,
    // so its multiplicity is already known during the level-ordered pass.
    std::vector<i64> dominantize(std::vector<i64> dyn) const
    {
        for (;;) {
            int neg = -1;
            for (int i = 0; i < r; ++i)
                if (dyn[i] < 0) {
                    neg = i;
                    break;
                }
            if (neg < 0)
                return dyn;
            i64 c = dyn[neg];
            for (int j = 0; j < r; ++j)
                dyn[j] -= c * simple_dynkin[neg][j];
        }
    }
};

} // namespace

WeightSystem weight_system(const RootSystem& rs, const Weight& mu, const Limits& limits)
{
    if (!mu.is_dominant())
        throw config_error("weight_system requires a dominant highest weight");
    i64 dim = weyl_dim(rs, mu);
    if (dim > limits.dim_ceiling)
        throw resource_error("module dimension " + std::to_string(dim) +
                             " exceeds dimension ceiling " + std::to_string(limits.dim_ceiling));

    Builder b(rs);
    b.generate(mu);
    b.multiplicities(mu);

    WeightSystem ws(mu, std::move(b.entries));
    if (ws.dimension() != dim)
        throw std::logic_error("weight system dimension " + std::to_string(ws.dimension()) +
                               " disagrees with Weyl dimension " + std::to_string(dim));
    return ws;
}

bool is_weight_multiplicity_free(const WeightSystem& ws)
{
    for (const auto& e : ws.entries())
        if (e.mult != 1)
            return false;
    return true;
}

std::vector<MFCatalogEntry> mf_catalog(const RootSystem& rs, const Limits& limits)
{
    const LieType t = rs.type();
    const int r = t.rank;
    std::vector<MFCatalogEntry> out;

    auto fund = [&](int k) { return rs.fundamental_weight(k); };
    auto add = [&](Weight mu, std::string label) {
        MFCatalogEntry e;
        e.lie_type = t;
        e.self_dual = rs.is_self_dual(mu);
        e.highest_weight = std::move(mu);
        e.label = std::move(label);
        out.push_back(std::move(e));
    };
    auto sym = [&](int a, int node) {
        std::vector<i64> d(r, 0);
        d[node] = a;
        return rs.weight_from_dynkin(std::move(d));
    };

    switch (t.family) {
    case Family::A:
        if (r == 1) {
            for (int a = 1; a <= limits.sym_degree_ceiling; ++a)
                add(sym(a, 0), "sym:" + std::to_string(a));
        } else {
            for (int k = 1; k <= r; ++k)
                add(fund(k), "wedge:" + std::to_string(k));
            for (int a = 2; a <= limits.sym_degree_ceiling; ++a) {
                add(sym(a, 0), "sym:" + std::to_string(a));
                add(sym(a, r - 1), "sym*:" + std::to_string(a));
            }
        }
        break;
    case Family::B:
        add(fund(1), "standard");
        add(fund(r), "spin");
        break;
    case Family::C:
        add(fund(1), "standard");
        if (r == 2 || r == 3)
            add(fund(r), "wedge:" + std::to_string(r));
        break;
    case Family::D:
        add(fund(1), "standard");
        add(fund(r - 1), "spin-");
        add(fund(r), "spin");
        break;
    case Family::E:
        if (r == 6) {
            add(fund(1), "fund:1");
            add(fund(6), "fund:6");
        } else if (r == 7) {
            add(fund(7), "fund:7");
        }
        // e8 has none
        break;
    case Family::F:
        break; // f4 has none
    case Family::G:
        add(fund(1), "standard");
        break;
    }
    return out;
}

std::vector<std::vector<i64>> spin_weight_oracle(LieType t, SpinKind which)
{
    const int r = t.rank;
    if (which == SpinKind::BSpin) {
        if (t.family != Family::B)
            throw config_error("BSpin oracle requires family B");
    } else {
        if (t.family != Family::D)
            throw config_error("D spin oracle requires family D");
    }

    std::vector<std::vector<i64>> out;
    std::vector<i64> lam(r, 0);

    if (which == SpinKind::BSpin) {
        // lam^1 in {0,1}; lam^i - lam^(i-1) in {0,1}
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == r) {
                out.push_back(lam);
                return;
            }
            i64 prev = pos == 0 ? 0 : lam[pos - 1];
            for (i64 v = prev; v <= prev + 1; ++v) {
                lam[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    } else {
        // chain constraint through lam^(r-2); the last two entries satisfy
        //   DLast:        lam^r - lam^(r-1) in {0,1},  lam^r + lam^(r-1) - lam^(r-2) in {0,1}
        //   DSecondLast:  lam^(r-1) - lam^r in {0,1},  lam^r + lam^(r-1) - lam^(r-2) in {0,1}
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == r - 2) {
                i64 s = r >= 3 ? lam[r - 3] : 0;
                for (i64 sum = s; sum <= s + 1; ++sum) {
                    for (i64 diff = 0; diff <= 1; ++diff) {
                        i64 twice_last = sum + diff;
                        if (twice_last % 2 != 0)
                            continue;
                        i64 hi = twice_last / 2;  // the end carrying +diff
                        i64 lo = hi - diff;
                        if (lo < 0)
                            continue;
                        if (which == SpinKind::DLast) {
                            lam[r - 1] = hi;
                            lam[r - 2] = lo;
                        } else {
                            lam[r - 2] = hi;
                            lam[r - 1] = lo;
                        }
                        out.push_back(lam);
                    }
                }
                return;
            }
            i64 prev = pos == 0 ? 0 : lam[pos - 1];
            for (i64 v = prev; v <= prev + 1; ++v) {
                lam[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_cache_text(const LieType& t, const WeightSystem& ws)
{
    std::ostringstream os;
    os << "weight-system " << static_cast<char>(t.family) << ' ' << t.rank << " mu";
    for (i64 d : ws.highest().dynkin)
        os << ' ' << d;
    os << '\n';
    std::vector<const WeightEntry*> sorted;
    sorted.reserve(ws.entries().size());
    for (const auto& e : ws.entries())
        sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(),
              [](const WeightEntry* a, const WeightEntry* b) { return a->dynkin < b->dynkin; });
    for (const WeightEntry* e : sorted) {
        for (std::size_t i = 0; i < e->dynkin.size(); ++i)
            os << (i ? " " : "") << e->dynkin[i];
        os << " : " << e->mult << '\n';
    }
    return os.str();
}

WeightSystem from_cache_text(const RootSystem& rs, const std::string& text)
{
    std::istringstream is(text);
    std::string tag, fam;
    int rank = 0;
    std::string mu_kw;
    if (!(is >> tag >> fam >> rank >> mu_kw) || tag != "weight-system" || mu_kw != "mu")
        throw config_error("malformed weight-system header");
    if (parse_family(fam) != rs.type().family || rank != rs.rank())
        throw config_error("weight-system header does not match requested type");

    const int r = rs.rank();
    std::vector<i64> mu_dyn(r);
    for (int i = 0; i < r; ++i)
        if (!(is >> mu_dyn[i]))
            throw config_error("malformed weight-system header");
    Weight mu = rs.weight_from_dynkin(mu_dyn);

    std::vector<WeightEntry> entries;
    std::string line;
    std::getline(is, line); // rest of header line
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        WeightEntry e;
        e.dynkin.resize(r);
        for (int i = 0; i < r; ++i)
            if (!(ls >> e.dynkin[i]))
                throw config_error("malformed weight-system line: " + line);
        std::string colon;
        if (!(ls >> colon >> e.mult) || colon != ":" || e.mult <= 0)
            throw config_error("malformed weight-system line: " + line);
        // lowering = cartan_inv * (mu - lambda), must be a nonnegative integer vector
        e.lowering.assign(r, 0);
        for (int i = 0; i < r; ++i) {
            Rat k;
            for (int j = 0; j < r; ++j)
                k += rs.cartan_inv()[i][j] * Rat(mu_dyn[j] - e.dynkin[j]);
            if (!k.is_integer() || k.num() < 0)
                throw config_error("weight outside the lowering cone of mu");
            e.lowering[i] = k.num();
        }
        entries.push_back(std::move(e));
    }
    return WeightSystem(std::move(mu), std::move(entries));
}

} // namespace hodge
