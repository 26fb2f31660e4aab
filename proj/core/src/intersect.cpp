#include "arcsmith/intersect.hpp"

#include <vector>

#include "arcsmith/errors.hpp"

namespace arcsmith {

namespace {

// dense row over the monomial basis of K[x,y]/m^d
using Row = std::vector<Scalar>;

std::size_t basis_size(std::size_t d) { return d * (d + 1) / 2; }

// index of x^a y^b among monomials of total degree < d, graded then by a
std::size_t monomial_index(std::size_t a, std::size_t b) {
    const std::size_t deg = a + b;
    return deg * (deg + 1) / 2 + b;
}

// rank by Gaussian elimination over the field
std::size_t rank_of(std::vector<Row>& rows, const CoefficientRing& K,
                    std::size_t width) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && K.is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = K.inv(rows[rank][col]);
        for (std::size_t c = col; c < width; ++c)
            rows[rank][c] = K.mul(rows[rank][c], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || K.is_zero(rows[r][col])) continue;
            Scalar factor = rows[r][col];
            for (std::size_t c = col; c < width; ++c)
                rows[r][c] = K.sub(rows[r][c], K.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

// dimension of K[x,y]/(f, g, m^d)
std::size_t quotient_dim(const LocalPair& pair, std::size_t d) {
    const CoefficientRing& K = pair.field;
    const std::size_t width = basis_size(d);
    std::vector<Row> rows;
    // multiples u*f and u*g for monomials u of degree < d, reduced mod m^d
    for (const SparsePoly* poly : {&pair.f, &pair.g}) {
        for (std::size_t du = 0; du + 1 <= d; ++du) {
            for (std::size_t a = 0; a <= du; ++a) {
                const std::size_t b = du - a;
                Row row(width, K.zero());
                bool nonzero = false;
                for (const auto& t : poly->terms()) {
                    const std::size_t ta = t.exps[0] + a, tb = t.exps[1] + b;
                    if (ta + tb >= d) continue;
                    const std::size_t idx = monomial_index(ta, tb);
                    row[idx] = K.add(row[idx], t.coeff);
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    return width - rank_of(rows, K, width);
}

} // namespace

void LocalPair::validate() const {
    if (!field.is_field())
        throw PreconditionError("intersection multiplicities need a field, got " +
                                field.description());
    for (const SparsePoly* p : {&f, &g}) {
        if (p->nvars() != 2)
            throw PreconditionError("local pairs are plane-curve germs in 2 "
                                    "variables");
        if (!(p->ring() == field))
            throw StructuralError("local pair polynomial ring differs from field");
        if (!field.is_zero(p->constant_term()))
            throw PreconditionError("local pair members must vanish at the origin");
    }
}

MultiplicityResult local_intersection_multiplicity(const LocalPair& pair,
                                                   std::size_t degree_cap) {
    pair.validate();
    if (degree_cap < 1) throw PreconditionError("degree_cap must be >= 1");

    std::size_t prev = quotient_dim(pair, 1); // always 1: f, g are in m
    for (std::size_t d = 1; d < degree_cap; ++d) {
        std::size_t next = quotient_dim(pair, d + 1);
        if (next == prev) return {true, prev, d};
        prev = next;
    }
    return {false, 0, 0};
}

std::size_t pairwise_total_intersection(std::span<const LabeledPair> pairs,
                                        std::size_t degree_cap) {
    std::size_t total = 0;
    for (const auto& lp : pairs) {
        MultiplicityResult r = local_intersection_multiplicity(lp.pair, degree_cap);
        if (!r.isolated)
            throw PreconditionError("intersection at point '" + lp.point +
                                    "' is not isolated");
        total += r.multiplicity;
    }
    return total;
}

} // namespace arcsmith
