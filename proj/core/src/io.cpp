#include "sptri/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sptri {
namespace io {

using nlohmann::json;

Format format_from_string(const std::string& s) {
    if (s == "plain" || s == "txt") return Format::plain;
    if (s == "json") return Format::json;
    throw MalformedInputError("unknown format '" + s + "'");
}

std::string to_string(Format f) { return f == Format::plain ? "plain" : "json"; }

std::string write_plain(const NamedComplex& nc) {
    std::ostringstream os;
    if (!nc.name.empty()) os << "# " << nc.name << "\n";
    for (const Face& f : nc.complex.facets()) {
        const auto& vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) os << " ";
            os << vs[i].label;
        }
        os << "\n";
    }
    return os.str();
}

std::string write_json(const NamedComplex& nc) {
    json j;
    j["name"] = nc.name;
    json verts = json::array();
    for (const VertexId& v : nc.complex.vertices()) verts.push_back(v.label);
    j["vertices"] = verts;
    json facets = json::array();
    for (const Face& f : nc.complex.facets()) {
        json row = json::array();
        for (const VertexId& v : f.vertices()) row.push_back(v.label);
        facets.push_back(row);
    }
    j["facets"] = facets;
    if (nc.coloring) {
        json c = json::object();
        for (const auto& [v, col] : *nc.coloring) c[v.label] = col;
        j["coloring"] = c;
    }
    if (nc.involution) {
        json inv = json::object();
        for (const auto& [v, w] : *nc.involution) inv[v.label] = w.label;
        j["involution"] = inv;
    }
    return j.dump(2) + "\n";
}

std::string write(const NamedComplex& nc, Format format) {
    return format == Format::plain ? write_plain(nc) : write_json(nc);
}

NamedComplex read_plain(const std::string& text, const std::string& name) {
    NamedComplex nc;
    nc.name = name;
    std::vector<Face> faces;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        // a leading comment carries the name, mirroring write_plain
        if (lineno == 1 && nc.name.empty() && line.rfind("# ", 0) == 0) {
            nc.name = line.substr(2);
            continue;
        }
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::vector<VertexId> vs;
        std::string tok;
        while (ls >> tok) vs.emplace_back(tok);
        if (vs.empty()) continue;
        try {
            faces.push_back(Face(std::move(vs)));
        } catch (const MalformedInputError& e) {
            throw MalformedInputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (faces.empty()) {
        throw MalformedInputError("input contains no facets");
    }
    nc.complex = from_facets(std::move(faces));
    return nc;
}

NamedComplex read_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInputError(std::string("json: ") + e.what());
    }
    NamedComplex nc;
    nc.name = j.value("name", "");
    if (!j.contains("facets") || !j["facets"].is_array() || j["facets"].empty()) {
        throw MalformedInputError("json: missing or empty 'facets' array");
    }
    std::vector<Face> faces;
    for (const auto& row : j["facets"]) {
        std::vector<VertexId> vs;
        for (const auto& label : row) vs.emplace_back(label.get<std::string>());
        faces.push_back(Face(std::move(vs)));
    }
    nc.complex = from_facets(std::move(faces));
    if (j.contains("coloring")) {
        Coloring c;
        for (auto it = j["coloring"].begin(); it != j["coloring"].end(); ++it) {
            c[VertexId(it.key())] = it.value().get<int>();
        }
        nc.coloring = std::move(c);
    }
    if (j.contains("involution")) {
        VertexMap inv;
        for (auto it = j["involution"].begin(); it != j["involution"].end(); ++it) {
            inv[VertexId(it.key())] = VertexId(it.value().get<std::string>());
        }
        nc.involution = std::move(inv);
    }
    return nc;
}

NamedComplex read(const std::string& text, Format format) {
    return format == Format::plain ? read_plain(text) : read_json(text);
}

namespace {

Format format_from_path(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    return ext == "json" ? Format::json : Format::plain;
}

} // namespace

NamedComplex read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read(buf.str(), format_from_path(path));
}

void write_file(const std::string& path, const NamedComplex& nc, Format format) {
    std::ofstream out(path);
    if (!out) throw MalformedInputError("cannot open '" + path + "' for writing");
    out << write(nc, format);
}

std::string digest(const std::string& content) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace io
} // namespace sptri
