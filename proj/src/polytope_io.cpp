#include "clawdeg/polytope_io.hpp"

#include <sstream>
#include <stdexcept>

namespace clawdeg {

using nlohmann::json;

std::string to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
    r.canonicalize();
    return r;
}

BigInt parse_int(const std::string& s) {
    BigInt z;
    if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("malformed integer '" + s + "'");
    return z;
}

json to_json(const RatPoint& p) {
    json a = json::array();
    for (const auto& x : p) a.push_back(to_string(x));
    return a;
}

json to_json(const VPolytope& v) {
    json verts = json::array();
    for (const auto& p : v.vertices) verts.push_back(to_json(p));
    return {{"kind", "V"}, {"dim", v.dim}, {"vertices", std::move(verts)}};
}

json to_json(const HPolytope& h) {
    json rows = json::array();
    for (const auto& s : h.halfspaces) {
        json normal = json::array();
        for (const auto& a : s.normal) normal.push_back(a.get_str());
        rows.push_back({{"normal", std::move(normal)}, {"offset", s.offset.get_str()}});
    }
    return {{"kind", "H"}, {"dim", h.dim}, {"halfspaces", std::move(rows)}};
}

VPolytope vpolytope_from_json(const json& j) {
    if (j.at("kind") != "V") throw std::invalid_argument("expected a V-polytope document");
    const int dim = j.at("dim").get<int>();
    std::vector<RatPoint> pts;
    for (const auto& row : j.at("vertices")) {
        RatPoint p;
        for (const auto& x : row) p.push_back(parse_rat(x.get<std::string>()));
        pts.push_back(std::move(p));
    }
    return VPolytope(dim, std::move(pts));
}

HPolytope hpolytope_from_json(const json& j) {
    if (j.at("kind") != "H") throw std::invalid_argument("expected an H-polytope document");
    HPolytope h;
    h.dim = j.at("dim").get<int>();
    for (const auto& row : j.at("halfspaces")) {
        HalfSpace s;
        for (const auto& a : row.at("normal")) s.normal.push_back(parse_int(a.get<std::string>()));
        s.offset = parse_int(row.at("offset").get<std::string>());
        h.add(std::move(s));
    }
    return h;
}

std::string to_ext(const VPolytope& v) {
    std::ostringstream os;
    os << "V-representation\nbegin\n" << v.size() << ' ' << v.dim + 1 << " rational\n";
    for (const auto& p : v.vertices) {
        os << " 1";
        for (const auto& x : p) os << ' ' << to_string(x);
        os << '\n';
    }
    os << "end\n";
    return os.str();
}

std::string to_ine(const HPolytope& h) {
    std::ostringstream os;
    os << "H-representation\nbegin\n" << h.halfspaces.size() << ' ' << h.dim + 1 << " integer\n";
    for (const auto& s : h.halfspaces) {
        os << ' ' << s.offset.get_str();
        for (const auto& a : s.normal) os << ' ' << BigInt(-a).get_str();
        os << '\n';
    }
    os << "end\n";
    return os.str();
}

namespace {

struct CddBlock {
    std::string representation;
    std::vector<std::vector<std::string>> rows;
    int cols = 0;
};

CddBlock parse_cdd(const std::string& text) {
    std::istringstream in(text);
    CddBlock b;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '*') continue;
        if (line == "V-representation" || line == "H-representation") b.representation = line;
        if (line == "begin") break;
    }
    if (!in) throw std::invalid_argument("cdd: missing 'begin'");
    std::size_t m = 0;
    std::string type;
    if (!(in >> m >> b.cols >> type)) throw std::invalid_argument("cdd: malformed size line");
    if (type != "integer" && type != "rational") throw std::invalid_argument("cdd: unsupported number type " + type);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::string> row(b.cols);
        for (auto& tok : row) {
            if (!(in >> tok)) throw std::invalid_argument("cdd: truncated row");
        }
        b.rows.push_back(std::move(row));
    }
    std::string end;
    if (!(in >> end) || end != "end") throw std::invalid_argument("cdd: missing 'end'");
    return b;
}

}  // namespace

VPolytope parse_ext(const std::string& text) {
    CddBlock b = parse_cdd(text);
    if (b.representation != "V-representation") throw std::invalid_argument("cdd: expected V-representation");
    std::vector<RatPoint> pts;
    for (const auto& row : b.rows) {
        if (parse_rat(row[0]) != 1) throw std::invalid_argument("cdd: only points (leading 1) are supported");
        RatPoint p;
        for (int c = 1; c < b.cols; ++c) p.push_back(parse_rat(row[c]));
        pts.push_back(std::move(p));
    }
    return VPolytope(b.cols - 1, std::move(pts));
}

HPolytope parse_ine(const std::string& text) {
    CddBlock b = parse_cdd(text);
    if (b.representation != "H-representation") throw std::invalid_argument("cdd: expected H-representation");
    HPolytope h;
    h.dim = b.cols - 1;
    for (const auto& row : b.rows) {
        HalfSpace s;
        s.offset = parse_int(row[0]);
        for (int c = 1; c < b.cols; ++c) s.normal.push_back(-parse_int(row[c]));
        h.add(std::move(s));
    }
    return h;
}

}  // namespace clawdeg
