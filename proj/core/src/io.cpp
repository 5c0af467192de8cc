#include "bundlelabel/io.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace bundlelabel {

namespace {

using nlohmann::json;

json cert_to_json_obj(const AdmissibilityCertificate& cert) {
    json j;
    j["case"] = case_name(cert.form);
    j["a"] = cert.a;
    j["k"] = cert.k;
    j["t"] = cert.t ? json(*cert.t) : json(nullptr);
    j["t_prime"] = cert.t_prime ? json(*cert.t_prime) : json(nullptr);
    j["p"] = cert.p ? json(*cert.p) : json(nullptr);
    j["i_case"] = cert.i_case ? json(*cert.i_case) : json(nullptr);
    return j;
}

ProductKind kind_from_string(const std::string& s) {
    if (s == "direct") return ProductKind::Direct;
    if (s == "cartesian") return ProductKind::Cartesian;
    throw std::invalid_argument("unknown product kind \"" + s + "\"");
}

}  // namespace

std::string to_json(const LabelingFile& file) {
    json j;
    j["m"] = file.m;
    j["n"] = file.n;
    j["d"] = file.d;
    j["labels"] = file.labels;
    if (file.kind) j["kind"] = kind_name(*file.kind);
    if (file.ell) j["ell"] = *file.ell;
    if (file.certificate) j["certificate"] = cert_to_json_obj(*file.certificate);
    return j.dump(2) + "\n";
}

LabelingFile labeling_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad labeling JSON: ") +
                                    e.what());
    }
    LabelingFile file;
    try {
        file.m = j.at("m").get<int>();
        file.n = j.at("n").get<int>();
        file.d = j.at("d").get<int>();
        file.labels = j.at("labels").get<std::vector<int>>();
        if (j.contains("kind") && !j["kind"].is_null())
            file.kind = kind_from_string(j["kind"].get<std::string>());
        if (j.contains("ell") && !j["ell"].is_null())
            file.ell = j["ell"].get<int>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad labeling JSON: ") +
                                    e.what());
    }
    return file;
}

std::string certificate_json(const AdmissibilityCertificate& cert) {
    return cert_to_json_obj(cert).dump();
}

namespace {

std::string grid_with_separator(const std::vector<int>& labels, int m, int n,
                                char sep) {
    if (m < 1 || n < 1 || labels.size() != static_cast<size_t>(m) * n)
        throw std::invalid_argument("labels length does not match m*n grid");
    std::ostringstream os;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > 0) os << sep;
            os << labels[static_cast<size_t>(i) * n + j];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string to_csv(const std::vector<int>& labels, int m, int n) {
    return grid_with_separator(labels, m, n, ',');
}

std::string to_grid(const std::vector<int>& labels, int m, int n) {
    return grid_with_separator(labels, m, n, ' ');
}

}  // namespace bundlelabel
