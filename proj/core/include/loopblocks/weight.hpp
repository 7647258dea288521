#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "loopblocks/error.hpp"

namespace loopblocks {

/// An integral weight in fundamental-weight coordinates: entry i is lambda(h_i).
///
/// Arithmetic between weights of different lengths throws RankMismatch.
class Weight {
public:
    using value_type = std::int64_t;
    using storage_type = boost::container::small_vector<value_type, 8>;

    Weight() = default;
    explicit Weight(std::size_t rank) : coords_(rank, 0) {}
    Weight(std::initializer_list<value_type> init) : coords_(init) {}
    explicit Weight(std::span<const value_type> coords) : coords_(coords.begin(), coords.end()) {}

    /// omega_{i+1}: the fundamental weight for 0-based node index i.
    static Weight fundamental(std::size_t rank, std::size_t i)
    {
        Weight w(rank);
        w.coords_.at(i) = 1;
        return w;
    }

    std::size_t rank() const noexcept { return coords_.size(); }
    value_type operator[](std::size_t i) const noexcept { return coords_[i]; }
    value_type &operator[](std::size_t i) noexcept { return coords_[i]; }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }
    auto begin() noexcept { return coords_.begin(); }
    auto end() noexcept { return coords_.end(); }
    std::span<const value_type> coords() const noexcept { return {coords_.data(), coords_.size()}; }

    bool is_zero() const noexcept
    {
        return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
    }
    bool is_dominant() const noexcept
    {
        return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c >= 0; });
    }

    Weight &operator+=(const Weight &other)
    {
        check_rank(other);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] += other.coords_[i];
        }
        return *this;
    }
    Weight &operator-=(const Weight &other)
    {
        check_rank(other);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] -= other.coords_[i];
        }
        return *this;
    }
    Weight &operator*=(value_type k) noexcept
    {
        for (auto &c : coords_) {
            c *= k;
        }
        return *this;
    }

    friend Weight operator+(Weight a, const Weight &b) { return a += b; }
    friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
    friend Weight operator*(value_type k, Weight a) { return a *= k; }
    friend Weight operator-(Weight a)
    {
        a *= -1;
        return a;
    }

    friend bool operator==(const Weight &a, const Weight &b) noexcept
    {
        return std::equal(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
    }
    friend std::strong_ordering operator<=>(const Weight &a, const Weight &b) noexcept
    {
        return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                      b.coords_.end());
    }

    void check_rank(const Weight &other) const
    {
        if (other.rank() != rank()) {
            throw Error(ErrorKind::RankMismatch, "weights of rank " + std::to_string(rank()) + " and "
                                                     + std::to_string(other.rank()));
        }
    }

private:
    storage_type coords_;
};

std::ostream &operator<<(std::ostream &os, const Weight &w);

struct WeightHash {
    std::size_t operator()(const Weight &w) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.rank();
        for (auto c : w) {
            h ^= std::hash<Weight::value_type>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Element of the fundamental group P/Q: entry j is reduced modulo the j-th
/// nontrivial invariant factor of the Cartan matrix.
struct FundGroupElt {
    std::vector<std::int64_t> residues;

    bool is_zero() const noexcept
    {
        return std::all_of(residues.begin(), residues.end(), [](std::int64_t r) { return r == 0; });
    }
    friend bool operator==(const FundGroupElt &, const FundGroupElt &) = default;
    friend auto operator<=>(const FundGroupElt &, const FundGroupElt &) = default;
};

std::ostream &operator<<(std::ostream &os, const FundGroupElt &x);

} // namespace loopblocks
