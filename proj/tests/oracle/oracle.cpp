#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include <boost/rational.hpp>

namespace loopblocks::oracle {

namespace {

using Rat = boost::rational<std::int64_t>;

std::int64_t det_bareiss(IntMatrix a)
{
    const std::size_t n = a.size();
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t> &cur,
             std::vector<std::vector<std::size_t>> &out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::int64_t height(const RootSystem &rs, const Weight &w)
{
    const Weight c = rs.scaled_root_coords(w);
    return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

// index e with sigma^e(rep) = node, for a node on a free orbit
int sigma_distance(const FoldedSystem &fs, std::size_t rep, std::size_t node)
{
    for (int e = 0; e < fs.m(); ++e) {
        if (fs.sigma_power(rep, e) == node) {
            return e;
        }
    }
    throw std::logic_error("node outside orbit");
}

void add_symbol_part(const FoldedSystem &fs, const std::string &sym, const DrinfeldPoly &q, TwistedPoly &out)
{
    for (const auto &[c, w] : q.support()) {
        if (c.sym != sym) {
            continue;
        }
        for (std::size_t j = 0; j < w.rank(); ++j) {
            if (w[j] == 0) {
                continue;
            }
            const std::size_t k = fs.orbit_of(j);
            if (fs.is_fixed(k)) {
                out.add(k, {c.sym, 0}, w[j]);
            } else {
                const int e = sigma_distance(fs, fs.representatives()[k], j);
                out.add(k, shift(c, e, fs.m()), w[j]);
            }
        }
    }
}

} // namespace

std::vector<std::int64_t> determinantal_invariant_factors(const IntMatrix &a)
{
    const std::size_t n = a.size();
    std::vector<std::int64_t> d{1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> idx;
        std::vector<std::size_t> cur;
        subsets(n, k, 0, cur, idx);
        std::int64_t g = 0;
        for (const auto &rows : idx) {
            for (const auto &cols : idx) {
                IntMatrix minor(k, std::vector<std::int64_t>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        minor[i][j] = a[rows[i]][cols[j]];
                    }
                }
                g = std::gcd(g, det_bareiss(minor));
            }
        }
        d.push_back(g);
    }
    std::vector<std::int64_t> out;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::int64_t f = d[k] / d[k - 1];
        if (f != 1) {
            out.push_back(f);
        }
    }
    return out;
}

bool in_root_lattice_rational(const IntMatrix &cartan, const Weight &w)
{
    const std::size_t n = cartan.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = cartan[i][j];
        }
        m[i][n] = w[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (m[piv][col].numerator() == 0) {
            ++piv;
        }
        std::swap(m[piv], m[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != col && m[i][col].numerator() != 0) {
                const Rat f = m[i][col] / m[col][col];
                for (std::size_t j = col; j <= n; ++j) {
                    m[i][j] -= f * m[col][j];
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if ((m[i][n] / m[i][i]).denominator() != 1) {
            return false;
        }
    }
    return true;
}

std::vector<Weight> weyl_orbit(const RootSystem &rs, const Weight &w)
{
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        const Weight cur = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            Weight next = cur;
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                next[j] -= cur[i] * rs.cartan()[j][i];
            }
            if (seen.insert(next).second) {
                queue.push_back(next);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::map<Weight, std::int64_t> weight_system(const RootSystem &rs, const Weight &lam)
{
    std::map<Weight, std::int64_t> out;
    for (const auto &[mu, k] : weight_multiplicities(rs, lam)) {
        for (const auto &w : weyl_orbit(rs, mu)) {
            out[w] += k;
        }
    }
    return out;
}

std::map<Weight, std::int64_t> tensor_by_characters(const RootSystem &rs, const Weight &mu)
{
    const auto adjoint = weight_system(rs, rs.theta());
    const auto vmu = weight_system(rs, mu);
    std::map<Weight, std::int64_t> product;
    for (const auto &[a, ka] : adjoint) {
        for (const auto &[b, kb] : vmu) {
            product[a + b] += ka * kb;
        }
    }
    std::map<Weight, std::int64_t> out;
    for (;;) {
        std::erase_if(product, [](const auto &kv) { return kv.second == 0; });
        if (product.empty()) {
            break;
        }
        const Weight *top = nullptr;
        std::int64_t best = 0;
        for (const auto &[w, k] : product) {
            if (k < 0) {
                throw std::logic_error("negative coefficient while peeling");
            }
            const std::int64_t h = height(rs, w);
            if (top == nullptr || h > best) {
                top = &w;
                best = h;
            }
        }
        const Weight hw = *top;
        const std::int64_t k = product.at(hw);
        out[hw] += k;
        for (const auto &[w, kw] : weight_system(rs, hw)) {
            product[w] -= k * kw;
        }
    }
    return out;
}

TwistedPoly fold_nodewise(const FoldedSystem &fs, const DrinfeldPoly &p)
{
    std::set<std::string> syms;
    for (const auto &kv : p.support()) {
        syms.insert(kv.first.sym);
    }
    TwistedPoly out;
    for (const auto &s : syms) {
        add_symbol_part(fs, s, p, out);
    }
    return out;
}

std::vector<DrinfeldPoly> brute_fiber(const FoldedSystem &fs, const TwistedPoly &p)
{
    validate_twisted(fs, p);
    // orbit masses per symbol
    std::map<std::string, std::vector<std::int64_t>> mass;
    for (const auto &[k, roots] : p.comps()) {
        for (const auto &[root, mult] : roots) {
            auto &v = mass[root.sym];
            v.resize(fs.folded_rank(), 0);
            v[k] += mult;
        }
    }
    const auto m = static_cast<std::size_t>(fs.m());
    const std::size_t n = fs.rank();
    std::vector<DrinfeldPoly> acc{DrinfeldPoly{}};
    for (const auto &[sym, masses] : mass) {
        TwistedPoly target;
        for (const auto &[k, roots] : p.comps()) {
            for (const auto &[root, mult] : roots) {
                if (root.sym == sym) {
                    target.add(k, root, mult);
                }
            }
        }
        // variables x[z * n + j]: coefficient of omega_j at (sym, z)
        std::vector<std::int64_t> x(m * n, 0);
        std::vector<std::int64_t> used(fs.folded_rank(), 0);
        std::vector<DrinfeldPoly> local;
        auto rec = [&](auto &&self, std::size_t v) -> void {
            if (v == x.size()) {
                DrinfeldPoly q;
                for (std::size_t z = 0; z < m; ++z) {
                    Weight w(n);
                    for (std::size_t j = 0; j < n; ++j) {
                        w[j] = x[z * n + j];
                    }
                    q.insert({sym, static_cast<int>(z)}, w);
                }
                TwistedPoly img;
                add_symbol_part(fs, sym, q, img);
                if (img == target) {
                    local.push_back(std::move(q));
                }
                return;
            }
            const std::size_t k = fs.orbit_of(v % n);
            for (std::int64_t c = 0; used[k] + c <= masses[k]; ++c) {
                x[v] = c;
                used[k] += c;
                self(self, v + 1);
                used[k] -= c;
            }
            x[v] = 0;
        };
        rec(rec, 0);
        std::vector<DrinfeldPoly> next;
        for (const auto &a : acc) {
            for (const auto &b : local) {
                next.push_back(multiply(a, b));
            }
        }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

std::vector<FoldedSystem> standard_contexts()
{
    return {build_folding("A3", 2), build_folding("A4", 2), build_folding("D4", 3), build_folding("D4", 2)};
}

std::int64_t Generator::uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Weight Generator::dominant(std::size_t rank, std::int64_t max_coord)
{
    Weight w(rank);
    for (auto &c : w) {
        c = uniform(0, max_coord);
    }
    return w;
}

Weight Generator::folded_dominant(const FoldedSystem &fs, std::int64_t max_coord)
{
    Weight w = dominant(fs.folded_rank(), max_coord);
    if (fs.is_A2n()) {
        w[fs.middle()] -= w[fs.middle()] % 2;
    }
    return w;
}

Coordinate Generator::coordinate(const FoldedSystem &fs, int symbols)
{
    static const char *names[] = {"a", "b", "c", "d", "e", "f"};
    const auto s = static_cast<std::size_t>(uniform(0, std::min(symbols, 6) - 1));
    return {names[s], static_cast<int>(uniform(0, fs.m() - 1))};
}

DrinfeldPoly Generator::drinfeld(const FoldedSystem &fs, int factors, int symbols, std::int64_t max_coord)
{
    DrinfeldPoly p;
    const auto count = uniform(0, factors);
    for (std::int64_t i = 0; i < count; ++i) {
        p.insert(coordinate(fs, symbols), dominant(fs.rank(), max_coord));
    }
    return p;
}

TwistedPoly Generator::twisted(const FoldedSystem &fs, int symbols, std::int64_t max_coord, int per_symbol)
{
    static const char *names[] = {"a", "b", "c", "d", "e", "f"};
    TwistedPoly p;
    const auto count = uniform(0, std::min(symbols, 6));
    for (std::int64_t s = 0; s < count; ++s) {
        const auto factors = uniform(1, per_symbol);
        for (std::int64_t f = 0; f < factors; ++f) {
            const Coordinate c{names[s], static_cast<int>(uniform(0, fs.m() - 1))};
            p = twisted_multiply(p, twisted_pi_lambda_a(fs, folded_dominant(fs, max_coord), c));
        }
    }
    return p;
}

SpectralCharacter Generator::character(const FoldedSystem &fs, int entries, int symbols)
{
    SpectralCharacter x;
    const auto count = uniform(0, entries);
    for (std::int64_t i = 0; i < count; ++i) {
        const Weight w = dominant(fs.rank(), 3);
        x.assign(coordinate(fs, symbols), project_mod_Q(fs.ambient(), w));
    }
    return x;
}

} // namespace loopblocks::oracle
