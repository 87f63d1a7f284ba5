#include "hadamat/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hadamat/errors.hpp"

namespace hadamat {

using nlohmann::json;

std::string format_real(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

std::string render_matrix_plain(const Matrix& m) {
    std::ostringstream os;
    os << m.size() << "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j)
            os << (j ? " " : "") << format_real(m(i, j));
        os << "\n";
    }
    return os.str();
}

Matrix parse_matrix_plain(const std::string& text) {
    std::istringstream is(text);
    long long n = 0;
    if (!(is >> n) || n < 1) throw ParseError("expected a positive matrix size");
    std::vector<double> entries(static_cast<std::size_t>(n * n));
    for (double& e : entries)
        if (!(is >> e)) throw ParseError("matrix has fewer entries than declared");
    double extra;
    if (is >> extra) throw ParseError("matrix has more entries than declared");
    return Matrix::from_rows(static_cast<std::size_t>(n), entries);
}

std::string render_matrix_json(const Matrix& m) {
    json j;
    j["n"] = m.size();
    j["rows"] = m.data();
    return j.dump(2) + "\n";
}

Matrix parse_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.contains("n") || !j.contains("rows")) throw ParseError("expected keys n, rows");
    const auto n = j["n"].get<std::size_t>();
    const auto rows = j["rows"].get<std::vector<double>>();
    if (rows.size() != n * n) throw ParseError("rows length does not match n*n");
    return Matrix::from_rows(n, rows);
}

std::string render_matrix(const Matrix& m, FileFormat fmt) {
    return fmt == FileFormat::plain ? render_matrix_plain(m) : render_matrix_json(m);
}

Matrix parse_matrix(const std::string& text, FileFormat fmt) {
    return fmt == FileFormat::plain ? parse_matrix_plain(text) : parse_matrix_json(text);
}

namespace {

json partitions_to_json(const std::vector<Partition>& ps) {
    json out = json::array();
    for (const auto& p : ps) {
        json atoms = json::array();
        for (const auto& atom : p.atoms()) {
            json a = json::array();
            for (std::size_t i : atom) a.push_back(i + 1);
            atoms.push_back(a);
        }
        out.push_back(atoms);
    }
    return out;
}

std::vector<Partition> partitions_from_json(const json& j, std::size_t n) {
    std::vector<Partition> ps;
    for (const auto& jatoms : j) {
        std::vector<std::vector<std::size_t>> atoms;
        for (const auto& ja : jatoms) {
            std::vector<std::size_t> atom;
            for (const auto& ji : ja) {
                const auto idx = ji.get<long long>();
                if (idx < 1 || static_cast<std::size_t>(idx) > n)
                    throw ParseError("atom index out of range (indices are 1-based)");
                atom.push_back(static_cast<std::size_t>(idx - 1));
            }
            atoms.push_back(std::move(atom));
        }
        try {
            ps.emplace_back(n, std::move(atoms));
        } catch (const PreconditionFailed& e) {
            throw ParseError(e.what());
        }
    }
    return ps;
}

} // namespace

std::string render_sfm(const SfmRep& rep) {
    json j;
    j["kind"] = "sfm";
    j["n"] = rep.n();
    j["partitions"] = partitions_to_json(rep.partitions);
    json layers = json::array();
    for (const auto& ly : rep.layers)
        layers.push_back({{"C", ly.C}, {"Gamma", ly.Gamma}, {"p", ly.p}, {"q", ly.q}});
    j["layers"] = layers;
    return j.dump(2) + "\n";
}

SfmRep parse_sfm(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (j.value("kind", "sfm") != "sfm") throw ParseError("not an sfm representation file");
    SfmRep rep;
    const auto n = j.at("n").get<std::size_t>();
    rep.partitions = partitions_from_json(j.at("partitions"), n);
    for (const auto& jl : j.at("layers"))
        rep.layers.push_back({jl.at("C").get<Vector>(), jl.at("Gamma").get<Vector>(),
                              jl.at("p").get<Vector>(), jl.at("q").get<Vector>()});
    try {
        rep.validate();
    } catch (const PreconditionFailed& e) {
        throw ParseError(e.what());
    }
    return rep;
}

std::string render_filtered(const FilteredRep& rep) {
    json j;
    j["kind"] = "filtered";
    j["n"] = rep.n();
    j["partitions"] = partitions_to_json(rep.partitions);
    json layers = json::array();
    for (const auto& ly : rep.layers) layers.push_back({{"a", ly.a}, {"b", ly.b}});
    j["layers"] = layers;
    return j.dump(2) + "\n";
}

FilteredRep parse_filtered(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (j.value("kind", "filtered") != "filtered")
        throw ParseError("not a filtered representation file");
    FilteredRep rep;
    const auto n = j.at("n").get<std::size_t>();
    rep.partitions = partitions_from_json(j.at("partitions"), n);
    for (const auto& jl : j.at("layers"))
        rep.layers.push_back({jl.at("a").get<Vector>(), jl.at("b").get<Vector>()});
    try {
        rep.validate();
    } catch (const PreconditionFailed& e) {
        throw ParseError(e.what());
    }
    return rep;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

} // namespace hadamat
