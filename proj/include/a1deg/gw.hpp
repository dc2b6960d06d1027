#pragma once

#include "a1deg/matrix.hpp"

#include <vector>

namespace a1deg {

// A virtual diagonal symmetric form: a formal difference of the genuine
// forms <positive entries> and <negative entries>.  Entries are nonzero.
class DiagonalForm {
  public:
    explicit DiagonalForm(const Field& k) : field_(k) {}
    DiagonalForm(const Field& k, std::vector<FieldElement> positives,
                 std::vector<FieldElement> negatives = {});

    const Field& field() const { return field_; }
    const std::vector<FieldElement>& positive_entries() const { return pos_; }
    const std::vector<FieldElement>& negative_entries() const { return neg_; }
    bool is_genuine() const { return neg_.empty(); }

    long rank() const {
        return static_cast<long>(pos_.size()) - static_cast<long>(neg_.size());
    }
    // Canonical square-class representative of prod(pos)/prod(neg).
    FieldElement discriminant() const;
    // Over Q: (number of positive reals) - (number of negative reals),
    // counting negative_entries with reversed sign.
    long signature() const;

  private:
    Field field_;
    std::vector<FieldElement> pos_, neg_;
};

// An element of the unstable group: a stable form together with the exact
// unit tracking its determinant.  The unit must land in the discriminant's
// square class (the fiber condition); construction enforces this.
class UnstableClass {
  public:
    UnstableClass(DiagonalForm form, FieldElement unit);

    const DiagonalForm& form() const { return form_; }
    const FieldElement& unit() const { return unit_; }
    const Field& field() const { return form_.field(); }
    long rank() const { return form_.rank(); }

  private:
    DiagonalForm form_;
    FieldElement unit_;
};

// <a>^u: the rank-one class of a nonzero a.
UnstableClass gw_generator(const FieldElement& a);

// Identity element: the empty form with unit 1.
UnstableClass gw_zero(const Field& k);

UnstableClass gw_add(const UnstableClass& a, const UnstableClass& b);
UnstableClass gw_neg(const UnstableClass& a);

// A symmetric nondegenerate Gram matrix; the determinant is computed once
// on the untouched entries and cached.
class GramMatrix {
  public:
    explicit GramMatrix(Mat entries);

    const Mat& entries() const { return entries_; }
    std::size_t dimension() const { return entries_.rows(); }
    const FieldElement& det() const { return det_; }
    const Field& field() const { return entries_.field(); }

  private:
    Mat entries_;
    FieldElement det_;
};

// Hasse invariant prod_{i<j} (a_i, a_j)_v of a genuine diagonal form over
// Q.  Virtual forms are rejected; pair away negatives first.
int hasse_invariant(const DiagonalForm& form, const Place& v);

// Diagonalize by symmetric congruence moves and pair the result with the
// exact determinant.  Over Q the congruence is steered (and retried under
// deterministic unimodular remixes) until every diagonal entry has a
// certifiable square class, so downstream invariant computations can
// factor them.
UnstableClass gram_to_class(const GramMatrix& m);

// Decidable equality in the unstable group: exact unit comparison plus a
// complete stable-form comparison (rank and discriminant; over Q also
// signature and Hasse invariants at 2 and every odd prime dividing an
// entry, which decides rational isometry).
bool gw_equal(const UnstableClass& a, const UnstableClass& b);

} // namespace a1deg
