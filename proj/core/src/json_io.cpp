#include "kronreal/json_io.hpp"

#include <fstream>
#include <sstream>

#include "kronreal/error.hpp"

namespace kronreal::json {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) parse_error(std::string("expected an object holding '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) parse_error(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t count_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        parse_error(std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& m) {
    Json data = Json::array();
    for (const auto& x : m.entries()) data.push_back(to_json(x));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json to_json(const Realization& r) {
    return {{"n", r.states()},        {"m_in", r.inputs()},  {"m_out", r.outputs()}, {"A", to_json(r.A())},
            {"B", to_json(r.B())}, {"C", to_json(r.C())}, {"D", to_json(r.D())}};
}

Json to_json(const FactorDims& d) { return {{"n_l", d.n_l}, {"m_l", d.m_l}, {"n_r", d.n_r}, {"m_r", d.m_r}}; }

Json to_json(const MarginalSpec& s) {
    return {{"N1", s.n1}, {"N2", s.n2}, {"side", s.side == MarginalSide::A ? "A" : "B"}};
}

Json to_json(const FactorizationProblem& p) {
    Json j = {{"R_F", to_json(p.f)},
              {"R_Finv", to_json(p.f_inverse)},
              {"dims", to_json(p.dims)},
              {"u", to_json(p.u)},
              {"v", to_json(p.v)}};
    if (p.transform) j["T"] = to_json(*p.transform);
    return j;
}

Json to_json(const FactorizationResult& r) {
    Json samples = Json::array();
    for (const auto z : r.sample_points) samples.push_back(to_json(z));
    return {{"F_l", to_json(r.left)},
            {"F_r", to_json(r.right)},
            {"residual_report",
             {{"samples", std::move(samples)}, {"residuals", r.residuals}, {"max_residual", r.max_residual()}}}};
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        parse_error("complex entries are encoded as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    const Json& data = field(j, "data");
    if (!data.is_array() || data.size() != rows * cols) parse_error("matrix data length must equal rows*cols");
    std::vector<Complex> entries;
    entries.reserve(data.size());
    for (const auto& x : data) entries.push_back(complex_from_json(x));
    return CMatrix(rows, cols, std::move(entries));
}

Realization realization_from_json(const Json& j) {
    Realization r(matrix_from_json(field(j, "A")), matrix_from_json(field(j, "B")), matrix_from_json(field(j, "C")),
                  matrix_from_json(field(j, "D")));
    if (count_field(j, "n") != r.states() || count_field(j, "m_in") != r.inputs() ||
        count_field(j, "m_out") != r.outputs()) {
        parse_error("realization header (n, m_in, m_out) disagrees with its matrices");
    }
    return r;
}

FactorDims dims_from_json(const Json& j) {
    return {count_field(j, "n_l"), count_field(j, "m_l"), count_field(j, "n_r"), count_field(j, "m_r")};
}

MarginalSpec marginal_spec_from_json(const Json& j) {
    const Json& side = field(j, "side");
    if (!side.is_string() || (side != "A" && side != "B")) parse_error("marginal side must be \"A\" or \"B\"");
    return {count_field(j, "N1"), count_field(j, "N2"), side == "A" ? MarginalSide::A : MarginalSide::B};
}

FactorizationProblem problem_from_json(const Json& j) {
    FactorizationProblem p{realization_from_json(field(j, "R_F")),
                           realization_from_json(field(j, "R_Finv")),
                           dims_from_json(field(j, "dims")),
                           matrix_from_json(field(j, "u")),
                           matrix_from_json(field(j, "v")),
                           std::nullopt};
    if (j.contains("T")) p.transform = matrix_from_json(j["T"]);
    return p;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string dump_line(const Json& j) { return j.dump(); }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        parse_error(e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) parse_error("cannot write '" + path + "'");
    out << dump(j);
}

}  // namespace kronreal::json
