#pragma once

#include "bundlelabel/bundle.hpp"
#include "bundlelabel/labeling.hpp"
#include "bundlelabel/schemes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bundlelabel {

// On-disk labeling, JSON keys {"kind","m","n","ell","d","labels"} plus
// an optional "certificate" object.  kind/ell may be absent for plain
// grid labelings; readers that need to rebuild the bundle require them.
struct LabelingFile {
    std::optional<ProductKind> kind;
    int m = 0;
    int n = 0;
    std::optional<int> ell;
    int d = 1;
    std::vector<int> labels;  // flat vertex order, length m*n
    std::optional<AdmissibilityCertificate> certificate;
};

std::string to_json(const LabelingFile& file);
LabelingFile labeling_from_json(const std::string& text);

// {"case","a","k","t","t_prime","p","i_case"} with null for absent
// witnesses.
std::string certificate_json(const AdmissibilityCertificate& cert);

// m lines of n comma-separated labels, row i column j = f(i, j).
std::string to_csv(const std::vector<int>& labels, int m, int n);

// Same layout, space-separated.
std::string to_grid(const std::vector<int>& labels, int m, int n);

}  // namespace bundlelabel
