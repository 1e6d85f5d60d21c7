/*
   Copyright 2026 The ftmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FTMOD_FP_LINALG_HPP
#define FTMOD_FP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gf.hpp"

namespace ftmod::detail {

using FpVec = std::vector<std::uint32_t>;

// Row echelon form over F_p of a list of column vectors, used for kernels and solves.
class FpColumns {
   public:
    FpColumns(std::uint32_t p, std::size_t len) : p_(p), len_(len) {}

    void add(FpVec v) {
        v.resize(len_, 0);
        cols_.push_back(std::move(v));
    }
    std::size_t size() const { return cols_.size(); }

    // basis of {x : sum x_k col_k = 0}
    std::vector<FpVec> kernel() const {
        auto [rref, pivots] = eliminate(std::nullopt);
        const std::size_t n = cols_.size();
        std::vector<bool> is_piv(n, false);
        for (auto c : pivots) is_piv[c] = true;
        std::vector<FpVec> ker;
        for (std::size_t free = 0; free < n; ++free) {
            if (is_piv[free]) continue;
            FpVec x(n, 0);
            x[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = (p_ - rref[r][free]) % p_;
            ker.push_back(std::move(x));
        }
        return ker;
    }

    // some x with sum x_k col_k = b
    std::optional<FpVec> solve(FpVec b) const {
        b.resize(len_, 0);
        auto [rref, pivots] = eliminate(b);
        const std::size_t n = cols_.size();
        for (std::size_t r = pivots.size(); r < rref.size(); ++r)
            if (rref[r][n] != 0) return std::nullopt;
        FpVec x(n, 0);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rref[r][n];
        return x;
    }

    std::size_t rank() const { return eliminate(std::nullopt).second.size(); }

   private:
    std::pair<std::vector<FpVec>, std::vector<std::size_t>> eliminate(const std::optional<FpVec>& rhs) const {
        const std::size_t n = cols_.size();
        std::vector<FpVec> a(len_, FpVec(n + (rhs ? 1 : 0), 0));
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < len_; ++r) a[r][c] = cols_[c][r] % p_;
        if (rhs)
            for (std::size_t r = 0; r < len_; ++r) a[r][n] = (*rhs)[r] % p_;
        std::vector<std::size_t> piv;
        std::size_t row = 0;
        for (std::size_t c = 0; c < n && row < len_; ++c) {
            std::size_t s = row;
            while (s < len_ && a[s][c] == 0) ++s;
            if (s == len_) continue;
            std::swap(a[s], a[row]);
            const std::uint64_t inv = fp_inv(a[row][c], p_);
            for (auto& x : a[row]) x = static_cast<std::uint32_t>(x * inv % p_);
            for (std::size_t r = 0; r < len_; ++r) {
                if (r == row || a[r][c] == 0) continue;
                const std::uint64_t f = a[r][c];
                for (std::size_t k = 0; k < a[r].size(); ++k)
                    a[r][k] = static_cast<std::uint32_t>((a[r][k] + (p_ - f) * a[row][k]) % p_);
            }
            piv.push_back(c);
            ++row;
        }
        return {std::move(a), std::move(piv)};
    }

    std::uint32_t p_;
    std::size_t len_;
    std::vector<FpVec> cols_;
};

}  // namespace ftmod::detail

#endif
