#include "qsp/io.hpp"

#include <filesystem>
#include <fstream>

#include "qsp/errors.hpp"

namespace qsp::io {

namespace {

json complex_to_json(const cplx& c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) raise(errc::parse_error, "complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
T field(const json& j, const char* name) {
    if (!j.contains(name)) raise(errc::parse_error, std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception&) {
        raise(errc::parse_error, std::string("field '") + name + "' has the wrong type");
    }
}

} // namespace

json to_json(const LaurentPolynomial& p) {
    json coeffs = json::array();
    for (const cplx& c : p.coefficients()) coeffs.push_back(complex_to_json(c));
    return {{"min_exponent", p.min_exponent()}, {"coefficients", std::move(coeffs)}};
}

LaurentPolynomial polynomial_from_json(const json& j) {
    const int min_exponent = field<int>(j, "min_exponent");
    if (!j.contains("coefficients") || !j.at("coefficients").is_array()) {
        raise(errc::parse_error, "missing coefficient array");
    }
    std::vector<cplx> coeffs;
    for (const json& c : j.at("coefficients")) coeffs.push_back(complex_from_json(c));
    return LaurentPolynomial(min_exponent, std::move(coeffs));
}

json to_json(const PolynomialState& s) {
    json gammas = json::array();
    for (int k = s.min_power(); k <= s.degree() && !s.is_zero(); ++k) {
        const Eigen::VectorXcd g = s.gamma(k);
        json row = json::array();
        for (int x = 0; x < s.dim(); ++x) row.push_back(complex_to_json(g(x)));
        gammas.push_back(std::move(row));
    }
    return {{"dim", s.dim()}, {"min_power", s.min_power()}, {"gammas", std::move(gammas)}};
}

PolynomialState state_from_json(const json& j) {
    const int dim = field<int>(j, "dim");
    const int min_power = field<int>(j, "min_power");
    if (dim <= 0) raise(errc::parse_error, "state dimension must be positive");
    if (!j.contains("gammas") || !j.at("gammas").is_array()) {
        raise(errc::parse_error, "missing gamma list");
    }
    std::vector<Eigen::VectorXcd> gammas;
    for (const json& row : j.at("gammas")) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            raise(errc::parse_error, "gamma vector has wrong length");
        }
        Eigen::VectorXcd g(dim);
        for (int x = 0; x < dim; ++x) g(x) = complex_from_json(row[static_cast<std::size_t>(x)]);
        gammas.push_back(std::move(g));
    }
    return PolynomialState(dim, min_power, std::move(gammas));
}

json to_json(const Eigen::MatrixXcd& m) {
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        entries.push_back(std::move(row));
    }
    return {{"n", static_cast<int>(m.rows())}, {"entries", std::move(entries)}};
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
    const int n = field<int>(j, "n");
    if (n <= 0) raise(errc::parse_error, "matrix size must be positive");
    if (!j.contains("entries") || !j.at("entries").is_array() ||
        static_cast<int>(j.at("entries").size()) != n) {
        raise(errc::parse_error, "matrix entries must be an n-row array");
    }
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r) {
        const json& row = j.at("entries")[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            raise(errc::parse_error, "matrix row has wrong length");
        }
        for (int c = 0; c < n; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

json to_json(const Protocol& p) {
    json unitaries = json::array();
    for (const auto& u : p.unitaries) unitaries.push_back(to_json(u.mat()));
    return {{"signal_exponents", p.signal.exponents()}, {"unitaries", std::move(unitaries)}};
}

Protocol protocol_from_json(const json& j) {
    const auto exponents = field<std::vector<int>>(j, "signal_exponents");
    if (!j.contains("unitaries") || !j.at("unitaries").is_array() || j.at("unitaries").empty()) {
        raise(errc::parse_error, "protocol needs a nonempty unitary list");
    }
    std::vector<UnitaryMatrix> unitaries;
    for (const json& u : j.at("unitaries")) unitaries.emplace_back(matrix_from_json(u));
    return Protocol{SignalOperator(exponents), std::move(unitaries)};
}

json to_json(const ArcSpec& spec) {
    json arcs = json::array();
    for (const auto& [a, b] : spec.arcs) arcs.push_back(json::array({a, b}));
    return {{"delta", spec.gap}, {"arcs", std::move(arcs)}};
}

ArcSpec arcs_from_json(const json& j) {
    ArcSpec spec;
    spec.gap = field<double>(j, "delta");
    if (!j.contains("arcs") || !j.at("arcs").is_array()) raise(errc::parse_error, "missing arc list");
    for (const json& arc : j.at("arcs")) {
        if (!arc.is_array() || arc.size() != 2) raise(errc::parse_error, "arc must be [start, end]");
        spec.arcs.emplace_back(arc[0].get<double>(), arc[1].get<double>());
    }
    return spec;
}

json to_json(const BuildReport& report) {
    json j{{"grid_max_error", report.grid_max_error}, {"rescale_applied", report.rescale_applied}};
    if (report.truncation_bound) {
        j["truncation_bound"] = *report.truncation_bound;
    } else {
        j["truncation_bound"] = nullptr;
    }
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::parse_error, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        raise(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) raise(errc::parse_error, "cannot write " + tmp.string());
        out << contents;
    }
    std::filesystem::rename(tmp, target);
}

void write_json_file(const std::string& path, const json& j) {
    write_file_atomic(path, j.dump(2) + "\n");
}

} // namespace qsp::io
