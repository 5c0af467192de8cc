#pragma once

#include "bundlelabel/bundle.hpp"
#include "bundlelabel/labeling.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace bundlelabel {

// The four closed-form labelings.  With s = 2d+3 and a in {1, 2}:
//   direct    F: f(i,j) = (i + (d+a)j)  mod s
//   direct    G: f(i,j) = ((d+a)i + j)  mod s
//   cartesian F: f(i,j) = (di + (d+a)j) mod s
//   cartesian G: f(i,j) = ((d+a)i + dj) mod s
enum class SchemeKind { F, G };

struct LabelScheme {
    int d = 1;
    SchemeKind scheme = SchemeKind::F;
    int a = 1;  // 1 or 2
    int s() const { return 2 * d + 3; }
};

// Which closed form a shift satisfies.  The three cartesian G forms are
// keyed to d mod 3 and are mutually exclusive.
enum class AdmissibleCase {
    DirectF,          // ell = (ks + (-1)^a * 2m) mod n
    DirectG,          // ell = (ks - (-1)^a * (d+1)m) mod n
    CartesianF,       // ell = (ks + (-1)^a * 2dm) mod n
    CartesianG2mod3,  // d = 3t+2, ell = (ks - (2t+3)(d+a)m) mod n
    CartesianG1mod3,  // d = 3t+1, ell = (ks + (2t+1)(d+a)m) mod n
    CartesianG0mod3,  // d = 3t (t>=1), m = ps + 3t',
                      // ell = (ks + (i+a-1)s/3 - (-1)^a t') mod n
};

const char* case_name(AdmissibleCase c);
SchemeKind scheme_for(AdmissibleCase c);

// Integer witnesses proving ell has one of the admissible forms.
// Optional fields are present exactly when the case demands them.
struct AdmissibilityCertificate {
    AdmissibleCase form = AdmissibleCase::DirectF;
    int a = 1;
    int k = 0;
    std::optional<int> t;        // cartesian G cases
    std::optional<int> t_prime;  // CartesianG0mod3, in [0, 2t]
    std::optional<int> p;        // CartesianG0mod3, m = ps + 3t'
    std::optional<int> i_case;   // CartesianG0mod3, in {0, 1, 2}
};

// Re-evaluates the certificate's ell formula; a valid certificate for
// (d, m, n) reproduces the spec's shift.
int certificate_shift(const AdmissibilityCertificate& cert, int d, int m,
                      int n);

// Evaluates the closed form on every vertex.  Requires n divisible by
// s = 2d+3; does NOT require ell to be admissible, so the output of a
// bad shift can be fed to the verifier and watched fail.
Labeling labels_from_scheme(const BundleSpec& spec, const LabelScheme& sch);

// Every (case, witness) combination under which spec.ell satisfies one
// of the closed forms, in the deterministic preference order: F cases
// before G cases, a = 1 before a = 2, then ascending k, t', i.  k runs
// over 0..n/s-1, the full orbit of ks mod n.  Empty means no form
// applies to this shift.
std::vector<AdmissibilityCertificate> certify(const BundleSpec& spec, int d);

// Distinct admissible shifts for (kind, m, n, d), ascending.
std::vector<int> admissible_shifts(ProductKind kind, int m, int n, int d);

struct NotAdmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OptimalLabeling {
    Labeling labeling;
    AdmissibilityCertificate certificate;
};

// Builds the labeling for the first certificate in preference order and
// re-verifies it before returning; span is exactly 2d+2.  Throws
// NotAdmissibleError when certify() is empty and std::logic_error if
// the internal verification ever fails.  The span is known optimal for
// d <= 4 (degree_lower_bound matches); for d > 4 it is an upper bound.
OptimalLabeling label_optimal(const BundleSpec& spec, int d);

}  // namespace bundlelabel
