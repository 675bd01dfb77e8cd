#include "clarcube/io.hpp"

#include <fstream>
#include <sstream>

#include "clarcube/error.hpp"

namespace clarcube {

namespace {

std::vector<std::vector<long long>> read_number_rows(std::istream& in) {
    std::vector<std::vector<long long>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream fields(line);
        std::vector<long long> row;
        long long value;
        while (fields >> value) row.push_back(value);
        if (!fields.eof())
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected integers");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

Family sniff_family(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) throw Error(ErrorCode::EmptyInput, "input file has no data lines");
    std::size_t width = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != width)
            throw Error(ErrorCode::ParseError, "inconsistent number of fields per line");
    if (width == 2) return Family::benzenoid;
    if (width == 3) return rows.size() == 1 ? Family::tubulene : Family::fullerene;
    throw Error(ErrorCode::ParseError,
                "cannot infer format from " + std::to_string(width) + "-field lines");
}

int narrow(long long v, const char* what) {
    if (v < INT32_MIN || v > INT32_MAX)
        throw Error(ErrorCode::ParseError, std::string(what) + " out of range");
    return static_cast<int>(v);
}

} // namespace

std::optional<Family> parse_family_name(const std::string& name) {
    if (name == "benzenoid") return Family::benzenoid;
    if (name == "tubulene") return Family::tubulene;
    if (name == "fullerene") return Family::fullerene;
    return std::nullopt;
}

MolecularGraph read_molecular_graph(std::istream& in, std::optional<Family> declared) {
    auto rows = read_number_rows(in);
    Family family = declared ? *declared : sniff_family(rows);
    switch (family) {
        case Family::benzenoid: {
            std::set<HexCoord> hexes;
            for (const auto& row : rows) {
                if (row.size() != 2)
                    throw Error(ErrorCode::ParseError, "benzenoid lines must hold two integers");
                hexes.insert({narrow(row[0], "hexagon coordinate"), narrow(row[1], "hexagon coordinate")});
            }
            return build_benzenoid(hexes);
        }
        case Family::tubulene: {
            if (rows.size() != 1 || rows[0].size() != 3)
                throw Error(ErrorCode::ParseError, "tubulene input must be a single 'n m rings' line");
            TubuleneSpec spec;
            spec.n = narrow(rows[0][0], "chiral coefficient");
            spec.m = narrow(rows[0][1], "chiral coefficient");
            spec.rings = narrow(rows[0][2], "ring count");
            return build_tubulene(spec);
        }
        case Family::fullerene: {
            std::vector<std::vector<Vertex>> rotation;
            rotation.reserve(rows.size());
            for (const auto& row : rows) {
                if (row.size() != 3)
                    throw Error(ErrorCode::ParseError, "fullerene lines must hold three neighbor ids");
                rotation.push_back({static_cast<Vertex>(narrow(row[0], "neighbor id")),
                                    static_cast<Vertex>(narrow(row[1], "neighbor id")),
                                    static_cast<Vertex>(narrow(row[2], "neighbor id"))});
            }
            return load_fullerene(rotation);
        }
    }
    throw Error(ErrorCode::ParseError, "unknown family");
}

MolecularGraph read_molecular_graph_file(const std::string& path, std::optional<Family> declared) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    return read_molecular_graph(in, declared);
}

std::string format_preset_file(const PresetInput& input) {
    std::ostringstream out;
    switch (input.family) {
        case Family::benzenoid:
            out << "# benzenoid hexagon coordinates (q r)\n";
            for (const HexCoord& h : input.hexagons) out << h.q << ' ' << h.r << '\n';
            break;
        case Family::tubulene:
            out << input.tube.n << ' ' << input.tube.m << ' ' << input.tube.rings << '\n';
            break;
        case Family::fullerene:
            for (const auto& nb : input.rotation) out << nb[0] << ' ' << nb[1] << ' ' << nb[2] << '\n';
            break;
    }
    return out.str();
}

void write_preset_file(const std::string& path, const PresetInput& input) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    out << format_preset_file(input);
}

std::string resonance_to_dot(const ResonanceGraph& r) {
    std::ostringstream out;
    out << "graph resonance {\n";
    for (Vertex v = 0; v < r.n(); ++v) out << "  " << v << ";\n";
    for (const auto& [edge, hexagon] : r.edge_labels())
        out << "  " << edge.first << " -- " << edge.second << " [label=\"" << hexagon << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string resonance_to_json(const ResonanceGraph& r) {
    std::ostringstream out;
    out << "{\"vertices\":" << r.n() << ",\"edges\":[";
    bool first = true;
    for (const auto& [edge, hexagon] : r.edge_labels()) {
        if (!first) out << ',';
        first = false;
        out << '[' << edge.first << ',' << edge.second << ',' << hexagon << ']';
    }
    out << "]}";
    return out.str();
}

std::string cover_to_json(const GeneralizedClarCover& c) {
    std::ostringstream out;
    out << "{\"hexagons\":[";
    for (std::size_t i = 0; i < c.hexagons.size(); ++i) out << (i ? "," : "") << c.hexagons[i];
    out << "],\"pairs\":[";
    for (std::size_t i = 0; i < c.pairs.size(); ++i) out << (i ? "," : "") << c.pairs[i];
    out << "],\"free_edges\":[";
    for (std::size_t i = 0; i < c.free_edges.size(); ++i)
        out << (i ? "," : "") << '[' << c.free_edges[i].first << ',' << c.free_edges[i].second << ']';
    out << "]}";
    return out.str();
}

} // namespace clarcube
