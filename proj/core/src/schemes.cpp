#include "bundlelabel/schemes.hpp"

#include "bundlelabel/mod_arith.hpp"

#include <stdexcept>
#include <string>

namespace bundlelabel {

namespace {

// (-1)^a for a in {1, 2}
int sign_a(int a) { return a == 1 ? -1 : 1; }

void check_scheme_args(const BundleSpec& spec, int d) {
    validate(spec);
    if (d < 1) throw std::invalid_argument("separation d must be >= 1");
    const int s = 2 * d + 3;
    if (spec.n % s != 0)
        throw std::invalid_argument("fibre order n must be a multiple of " +
                                    std::to_string(s) + ", got " +
                                    std::to_string(spec.n));
}

}  // namespace

const char* case_name(AdmissibleCase c) {
    switch (c) {
        case AdmissibleCase::DirectF: return "direct-f";
        case AdmissibleCase::DirectG: return "direct-g";
        case AdmissibleCase::CartesianF: return "cartesian-f";
        case AdmissibleCase::CartesianG2mod3: return "cartesian-g-d2mod3";
        case AdmissibleCase::CartesianG1mod3: return "cartesian-g-d1mod3";
        case AdmissibleCase::CartesianG0mod3: return "cartesian-g-d0mod3";
    }
    return "unknown";
}

SchemeKind scheme_for(AdmissibleCase c) {
    switch (c) {
        case AdmissibleCase::DirectF:
        case AdmissibleCase::CartesianF: return SchemeKind::F;
        default: return SchemeKind::G;
    }
}

int certificate_shift(const AdmissibilityCertificate& cert, int d, int m,
                      int n) {
    const long long s = 2 * d + 3;
    const long long a = cert.a;
    const long long k = cert.k;
    const long long sign = sign_a(cert.a);
    long long raw = 0;
    switch (cert.form) {
        case AdmissibleCase::DirectF:
            raw = k * s + sign * 2 * m;
            break;
        case AdmissibleCase::DirectG:
            raw = k * s - sign * (d + 1) * m;
            break;
        case AdmissibleCase::CartesianF:
            raw = k * s + sign * 2 * d * m;
            break;
        case AdmissibleCase::CartesianG2mod3:
            raw = k * s - (2 * cert.t.value() + 3) * (d + a) * m;
            break;
        case AdmissibleCase::CartesianG1mod3:
            raw = k * s + (2 * cert.t.value() + 1) * (d + a) * m;
            break;
        case AdmissibleCase::CartesianG0mod3:
            raw = k * s + (cert.i_case.value() + a - 1) * (s / 3) -
                  sign * cert.t_prime.value();
            break;
    }
    return static_cast<int>(mod_floor(raw, n));
}

Labeling labels_from_scheme(const BundleSpec& spec, const LabelScheme& sch) {
    check_scheme_args(spec, sch.d);
    if (sch.a != 1 && sch.a != 2)
        throw std::invalid_argument("scheme parameter a must be 1 or 2");
    const int s = sch.s();
    int ci = 0, cj = 0;
    if (spec.kind == ProductKind::Direct) {
        ci = sch.scheme == SchemeKind::F ? 1 : sch.d + sch.a;
        cj = sch.scheme == SchemeKind::F ? sch.d + sch.a : 1;
    } else {
        ci = sch.scheme == SchemeKind::F ? sch.d : sch.d + sch.a;
        cj = sch.scheme == SchemeKind::F ? sch.d + sch.a : sch.d;
    }
    Labeling out;
    out.d = sch.d;
    out.labels.resize(static_cast<size_t>(spec.m) * spec.n);
    for (int i = 0; i < spec.m; ++i)
        for (int j = 0; j < spec.n; ++j)
            out.labels[static_cast<size_t>(i) * spec.n + j] =
                static_cast<int>(
                    mod_floor(static_cast<long long>(ci) * i +
                                  static_cast<long long>(cj) * j,
                              s));
    return out;
}

std::vector<AdmissibilityCertificate> certify(const BundleSpec& spec, int d) {
    check_scheme_args(spec, d);
    const int s = 2 * d + 3;
    const int k_count = spec.n / s;  // ks mod n has period n/s
    std::vector<AdmissibilityCertificate> out;

    auto try_cert = [&](AdmissibilityCertificate cert) {
        if (certificate_shift(cert, d, spec.m, spec.n) == spec.ell)
            out.push_back(cert);
    };

    if (spec.kind == ProductKind::Direct) {
        for (AdmissibleCase form :
             {AdmissibleCase::DirectF, AdmissibleCase::DirectG})
            for (int a = 1; a <= 2; ++a)
                for (int k = 0; k < k_count; ++k)
                    try_cert({form, a, k, {}, {}, {}, {}});
        return out;
    }

    for (int a = 1; a <= 2; ++a)
        for (int k = 0; k < k_count; ++k)
            try_cert({AdmissibleCase::CartesianF, a, k, {}, {}, {}, {}});

    switch (d % 3) {
        case 2: {
            const int t = (d - 2) / 3;
            for (int a = 1; a <= 2; ++a)
                for (int k = 0; k < k_count; ++k)
                    try_cert(
                        {AdmissibleCase::CartesianG2mod3, a, k, t, {}, {}, {}});
            break;
        }
        case 1: {
            const int t = (d - 1) / 3;
            for (int a = 1; a <= 2; ++a)
                for (int k = 0; k < k_count; ++k)
                    try_cert(
                        {AdmissibleCase::CartesianG1mod3, a, k, t, {}, {}, {}});
            break;
        }
        case 0: {
            if (d < 3) break;  // d = 3t needs t >= 1
            const int t = d / 3;
            // m = ps + 3t' pins p = m / s whenever m mod s == 3t'; every
            // witness combination is reported.
            for (int a = 1; a <= 2; ++a)
                for (int k = 0; k < k_count; ++k)
                    for (int t_prime = 0; t_prime <= 2 * t; ++t_prime) {
                        if (spec.m % s != 3 * t_prime) continue;
                        const int p = spec.m / s;
                        for (int i = 0; i <= 2; ++i)
                            try_cert({AdmissibleCase::CartesianG0mod3, a, k, t,
                                      t_prime, p, i});
                    }
            break;
        }
    }
    return out;
}

std::vector<int> admissible_shifts(ProductKind kind, int m, int n, int d) {
    std::vector<int> out;
    for (int ell = 0; ell < n; ++ell)
        if (!certify({kind, m, n, ell}, d).empty()) out.push_back(ell);
    return out;
}

OptimalLabeling label_optimal(const BundleSpec& spec, int d) {
    auto certs = certify(spec, d);
    if (certs.empty())
        throw NotAdmissibleError(
            "not admissible: shift " + std::to_string(spec.ell) +
            " satisfies no closed form for " +
            std::string(kind_name(spec.kind)) + " m=" + std::to_string(spec.m) +
            " n=" + std::to_string(spec.n) + " d=" + std::to_string(d));
    const auto& cert = certs.front();
    LabelScheme sch{d, scheme_for(cert.form), cert.a};
    OptimalLabeling result{labels_from_scheme(spec, sch), cert};
    auto report = verify_labeling(build_bundle(spec), result.labeling);
    if (!report.valid || report.span != 2 * d + 2)
        throw std::logic_error("internal verification failure");
    return result;
}

}  // namespace bundlelabel
