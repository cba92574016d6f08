#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "int_matrix.hpp"

namespace plumbook {

struct PageCensus {
    long long euler_characteristic;
    std::size_t genus;
    std::size_t boundary;
    std::size_t h1_rank;
    friend bool operator==(const PageCensus&, const PageCensus&) = default;
};

/// One 0-handle (a disk) with bands attached along its boundary. The boundary
/// is a cyclic sequence of feet; each band label occurs exactly twice. Bands are
/// untwisted, so the surface is orientable.
class RibbonPage {
public:
    [[nodiscard]] std::size_t bands() const noexcept { return bands_; }
    [[nodiscard]] const std::vector<std::size_t>& feet() const noexcept { return feet_; }
    [[nodiscard]] std::size_t zero_handles() const noexcept { return 1; }

    /// Adds a band with both feet inserted at the given sequence positions
    /// (first <= second, positions refer to the sequence before insertion).
    std::size_t add_band(std::size_t first, std::size_t second) {
        if (first > second || second > feet_.size()) throw std::out_of_range("RibbonPage: invalid foot position");
        std::size_t b = bands_++;
        feet_.insert(feet_.begin() + static_cast<std::ptrdiff_t>(second), b);
        feet_.insert(feet_.begin() + static_cast<std::ptrdiff_t>(first), b);
        pos_valid_ = false;
        return b;
    }

    /// Positions of the two feet of a band, in sequence order.
    [[nodiscard]] std::pair<std::size_t, std::size_t> foot(std::size_t b) const {
        refresh();
        if (b >= bands_) throw std::out_of_range("RibbonPage: unknown band");
        return pos_[b];
    }

    /// Algebraic intersection of band cores: +1 when the feet interleave as a<b<a<b.
    [[nodiscard]] long long intersection(std::size_t a, std::size_t b) const {
        auto [a1, a2] = foot(a);
        auto [b1, b2] = foot(b);
        if (a1 < b1 && b1 < a2 && a2 < b2) return 1;
        if (b1 < a1 && a1 < b2 && b2 < a2) return -1;
        return 0;
    }

    /// Skew form on H₁ in the band-core basis.
    [[nodiscard]] IntMatrix intersection_form() const {
        IntMatrix J(bands_, bands_);
        for (std::size_t a = 0; a < bands_; ++a)
            for (std::size_t b = 0; b < bands_; ++b) J(a, b) = intersection(a, b);
        return J;
    }

    /// Boundary walk: leave foot i along its band, arrive at the partner foot,
    /// continue along the disk boundary to the next foot.
    [[nodiscard]] std::size_t boundary_components() const {
        if (bands_ == 0) return 1;
        refresh();
        const std::size_t m = feet_.size();
        std::vector<std::size_t> partner(m);
        for (std::size_t b = 0; b < bands_; ++b) {
            partner[pos_[b].first] = pos_[b].second;
            partner[pos_[b].second] = pos_[b].first;
        }
        std::vector<bool> seen(m, false);
        std::size_t r = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (seen[i]) continue;
            ++r;
            for (std::size_t j = i; !seen[j]; j = partner[(j + 1) % m]) seen[j] = true;
        }
        return r;
    }

    [[nodiscard]] PageCensus census() const {
        long long chi = 1 - static_cast<long long>(bands_);
        std::size_t r = boundary_components();
        long long g2 = 2 - chi - static_cast<long long>(r);
        if (g2 < 0 || g2 % 2 != 0) throw std::logic_error("RibbonPage: inconsistent census");
        return {chi, static_cast<std::size_t>(g2 / 2), r, bands_};
    }

private:
    void refresh() const {
        if (pos_valid_) return;
        pos_.assign(bands_, {feet_.size(), feet_.size()});
        for (std::size_t i = 0; i < feet_.size(); ++i) {
            auto& p = pos_[feet_[i]];
            if (p.first == feet_.size()) p.first = i;
            else p.second = i;
        }
        pos_valid_ = true;
    }

    std::size_t bands_ = 0;
    std::vector<std::size_t> feet_;
    mutable std::vector<std::pair<std::size_t, std::size_t>> pos_;
    mutable bool pos_valid_ = true;
};

}  // namespace plumbook
