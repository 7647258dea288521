#include <cstdlib>
#include <utility>

#include "loopblocks/rootsys.hpp"

namespace loopblocks {

namespace {

IntMatrix identity(std::size_t n)
{
    IntMatrix id(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        id[i][i] = 1;
    }
    return id;
}

// Left (row) operations are mirrored into U and U^{-1}; column operations only
// touch the working matrix.
struct Reducer {
    IntMatrix a;
    IntMatrix u;
    IntMatrix uinv;
    std::size_t rows;
    std::size_t cols;

    explicit Reducer(const IntMatrix &m)
        : a(m), u(identity(m.size())), uinv(identity(m.size())), rows(m.size()), cols(m.empty() ? 0 : m[0].size())
    {
    }

    // row_i += q * row_t
    void add_row(std::size_t i, std::size_t t, std::int64_t q)
    {
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] += q * a[t][j];
        }
        for (std::size_t j = 0; j < rows; ++j) {
            u[i][j] += q * u[t][j];
        }
        for (std::size_t j = 0; j < rows; ++j) {
            uinv[j][t] -= q * uinv[j][i];
        }
    }
    void swap_rows(std::size_t i, std::size_t t)
    {
        std::swap(a[i], a[t]);
        std::swap(u[i], u[t]);
        for (std::size_t j = 0; j < rows; ++j) {
            std::swap(uinv[j][i], uinv[j][t]);
        }
    }
    void negate_row(std::size_t t)
    {
        for (auto &x : a[t]) {
            x = -x;
        }
        for (auto &x : u[t]) {
            x = -x;
        }
        for (std::size_t j = 0; j < rows; ++j) {
            uinv[j][t] = -uinv[j][t];
        }
    }
    // col_j += q * col_t
    void add_col(std::size_t j, std::size_t t, std::int64_t q)
    {
        for (std::size_t i = 0; i < rows; ++i) {
            a[i][j] += q * a[i][t];
        }
    }
    void swap_cols(std::size_t j, std::size_t t)
    {
        for (std::size_t i = 0; i < rows; ++i) {
            std::swap(a[i][j], a[i][t]);
        }
    }

    // Moves the smallest nonzero entry of the trailing block to (t, t).
    bool pivot(std::size_t t)
    {
        std::int64_t best = 0;
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                    best = std::llabs(a[i][j]);
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best == 0) {
            return false;
        }
        if (bi != t) {
            swap_rows(bi, t);
        }
        if (bj != t) {
            swap_cols(bj, t);
        }
        return true;
    }

    void run()
    {
        const std::size_t n = std::min(rows, cols);
        for (std::size_t t = 0; t < n; ++t) {
            if (!pivot(t)) {
                break;
            }
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    const std::int64_t q = a[i][t] / a[t][t];
                    if (q != 0) {
                        add_row(i, t, -q);
                    }
                    dirty = dirty || a[i][t] != 0;
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    const std::int64_t q = a[t][j] / a[t][t];
                    if (q != 0) {
                        add_col(j, t, -q);
                    }
                    dirty = dirty || a[t][j] != 0;
                }
                if (dirty) {
                    pivot(t);
                    continue;
                }
                // divisibility of the trailing block by the pivot
                bool fixed = false;
                for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
                    for (std::size_t j = t + 1; j < cols; ++j) {
                        if (a[i][j] % a[t][t] != 0) {
                            add_row(t, i, 1);
                            fixed = true;
                            break;
                        }
                    }
                }
                if (!fixed) {
                    break;
                }
                pivot(t);
            }
            if (a[t][t] < 0) {
                negate_row(t);
            }
        }
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix &m)
{
    Reducer r(m);
    r.run();
    SmithForm out;
    const std::size_t n = std::min(r.rows, r.cols);
    out.diagonal.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        out.diagonal.push_back(r.a[t][t]);
    }
    out.left = std::move(r.u);
    out.left_inverse = std::move(r.uinv);
    return out;
}

} // namespace loopblocks
