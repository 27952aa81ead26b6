#pragma once

#include "haarpoly/groupmodel.hpp"
#include "haarpoly/laurent.hpp"
#include "haarpoly/simplex.hpp"

#include <vector>

namespace haarpoly {

/** Exact certificate for the question "is the origin in the convex hull of
 *  the given integer points?". points is the sorted, deduplicated input.
 *  If origin_inside, weights gives convex coefficients (aligned with
 *  points, nonnegative, summing to 1) with sum weights[k] points[k] = 0.
 *  Otherwise separator is a rational vector v with v . m >= 1 for every
 *  point m. */
struct HullCertificate {
    bool origin_inside = false;
    std::vector<std::vector<int>> points;
    std::vector<Rational> weights;
    std::vector<Rational> separator;
};

/** Decide origin-in-hull by exact phase-1 simplex and return a certificate.
 *  Throws EmptySpectrumError on empty input and DimensionMismatchError on
 *  ragged points. */
HullCertificate origin_in_hull(const std::vector<std::vector<int>>& spectrum);

/** Re-check a certificate from scratch with exact arithmetic. */
bool verify_certificate(const HullCertificate& cert);

/** Smallest power from which products f^n g are guaranteed spectrum-free of
 *  the origin, given a separator v for the spectrum of f:
 *      n0 = 1 + max(0, floor(max over m' in sp_g of (-v . m'))).
 *  Validates v . m >= 1 on sp_f (InvalidSeparatorError otherwise; an empty
 *  sp_f throws EmptySpectrumError). An empty sp_g gives n0 = 1. */
long vanishing_threshold(const std::vector<std::vector<int>>& sp_f,
                         const std::vector<std::vector<int>>& sp_g,
                         const std::vector<Rational>& v);

/** The exact integrals of f^n for n = 1..n_max, computed by iterated
 *  multiplication (each power reuses the previous one). */
std::vector<GaussianRational> power_integral_sequence(const LaurentPoly& f, const MeasureSpec& spec,
                                                      int n_max);

/** Everything the moment-vanishing experiment produces for a pair (f, g). */
struct MathieuReport {
    int n_max = 0;
    std::vector<GaussianRational> power_integrals; // integral of f^n, n = 1..n_max
    bool hypothesis_holds_up_to_n_max = false;     // all of the above vanish
    bool spectrum_empty = false;                   // reduced f is 0
    HullCertificate hull;                          // meaningful when !spectrum_empty

    // Filled when the origin lies outside the hull: the separator implies
    // integral(f^n g) = 0 for all n >= n0; the range n0..n0+5 is verified
    // exactly and reported.
    bool conclusion_applies = false;
    long n0 = 0;
    std::vector<GaussianRational> conclusion_integrals;
    bool conclusion_verified = false;

    // Heuristic only (floating point): |integral(f^n)|^(1/n) for the n with
    // nonzero integral; diagnostic for how fast moments grow.
    std::vector<double> moment_growth;
};

/** Run the full experiment: reduce f and g, list power integrals up to
 *  n_max, decide the hull question for the spectrum of f, and when a
 *  separator exists, derive n0 and verify the conclusion window. */
MathieuReport mathieu_report(const GroupModel& model, const Expr& f, const Expr& g, int n_max);

} // namespace haarpoly
