#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hopfdom/algebra.hpp"

namespace hopfdom {

/// Exact subspace of the free vector space on `Key`, kept in fully reduced
/// row echelon form. The pivot of a row is its smallest key.
template <class Key>
class Subspace {
   public:
    /// Reduces v against the current rows; the remainder is zero iff v lies
    /// in the span.
    Sparse<Key> reduce(Sparse<Key> v) const {
        std::vector<Key> hits;
        for (const auto& [k, c] : v) {
            if (pivots_.count(k)) hits.push_back(k);
        }
        for (const Key& k : hits) {
            const CycloScalar c = v.coeff(k);
            if (!c.is_zero()) v.add_scaled(rows_[pivots_.at(k)], -c);
        }
        return v;
    }

    bool member(const Sparse<Key>& v) const { return reduce(v).is_zero(); }

    /// Adds v; returns false when v was already in the span.
    bool insert(const Sparse<Key>& v) {
        Sparse<Key> r = reduce(v);
        if (r.is_zero()) return false;
        const Key pivot = r.begin()->first;
        r = r.scaled(r.begin()->second.inverse());
        for (auto& row : rows_) {
            const CycloScalar c = row.coeff(pivot);
            if (!c.is_zero()) row.add_scaled(r, -c);
        }
        pivots_.emplace(pivot, rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    std::size_t dim() const noexcept { return rows_.size(); }
    /// Reduced basis, ordered by pivot.
    std::vector<Sparse<Key>> basis() const {
        std::vector<Sparse<Key>> out;
        for (const auto& [k, i] : pivots_) out.push_back(rows_[i]);
        return out;
    }

   private:
    std::vector<Sparse<Key>> rows_;
    std::map<Key, std::size_t> pivots_;
};

template <class Key>
Subspace<Key> span_basis(const std::vector<Sparse<Key>>& vectors) {
    Subspace<Key> s;
    for (const auto& v : vectors) s.insert(v);
    return s;
}

/// Coefficient vector over the input positions.
using Combination = Sparse<std::size_t>;

/// Basis of { c : sum_j c_j images[j] == 0 }, in fully reduced form with
/// respect to the largest free position.
template <class Key>
std::vector<Combination> kernel(const std::vector<Sparse<Key>>& images) {
    struct Row {
        Sparse<Key> img;
        Combination combo;
    };
    std::vector<Row> rows;
    std::map<Key, std::size_t> pivots;
    std::vector<Combination> out;
    for (std::size_t j = 0; j < images.size(); ++j) {
        Sparse<Key> v = images[j];
        Combination combo = Combination::term(j, CycloScalar::one(1));
        std::vector<Key> hits;
        for (const auto& [k, c] : v) {
            if (pivots.count(k)) hits.push_back(k);
        }
        for (const Key& k : hits) {
            const CycloScalar c = v.coeff(k);
            if (c.is_zero()) continue;
            const Row& r = rows[pivots.at(k)];
            v.add_scaled(r.img, -c);
            combo.add_scaled(r.combo, -c);
        }
        if (v.is_zero()) {
            out.push_back(std::move(combo));
            continue;
        }
        const Key pivot = v.begin()->first;
        const CycloScalar inv = v.begin()->second.inverse();
        Row nr{v.scaled(inv), combo.scaled(inv)};
        for (auto& r : rows) {
            const CycloScalar c = r.img.coeff(pivot);
            if (c.is_zero()) continue;
            r.img.add_scaled(nr.img, -c);
            r.combo.add_scaled(nr.combo, -c);
        }
        pivots.emplace(pivot, rows.size());
        rows.push_back(std::move(nr));
    }
    return out;
}

/// sum_j c_j vectors[j].
template <class Key>
Sparse<Key> combine(const Combination& c, const std::vector<Sparse<Key>>& vectors) {
    Sparse<Key> out;
    for (const auto& [j, cj] : c) out.add_scaled(vectors[j], cj);
    return out;
}

}  // namespace hopfdom
