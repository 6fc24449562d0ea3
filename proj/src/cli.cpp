#include "clawdeg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clawdeg/inclusion_exclusion.hpp"
#include "clawdeg/polytope_io.hpp"

namespace clawdeg {

namespace {

using nlohmann::json;

constexpr int kMaxFormulaN = 1000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string group;
    std::string n;
    std::string method;
    std::string format = "text";
    std::string output;
    std::string lemma;
    bool override_guard = false;
};

struct Range {
    int lo;
    int hi;
};

Range parse_range(const std::string& s) {
    auto to_int = [&](const std::string& t) {
        if (t.empty() || t.size() > 6 || !std::all_of(t.begin(), t.end(), ::isdigit)) {
            throw UsageError("--n expects an integer or a range a..b, got '" + s + "'");
        }
        return std::stoi(t);
    };
    const auto dots = s.find("..");
    Range r{};
    if (dots == std::string::npos) {
        r.lo = r.hi = to_int(s);
    } else {
        r.lo = to_int(s.substr(0, dots));
        r.hi = to_int(s.substr(dots + 2));
    }
    if (r.lo < 2) throw UsageError("n must be at least 2");
    if (r.hi < r.lo) throw UsageError("empty range '" + s + "'");
    return r;
}

GroupId group_of(const Options& o) {
    if (o.group.empty()) throw UsageError("--group is required");
    try {
        return parse_group(o.group);
    } catch (const std::invalid_argument&) {
        throw UsageError("unknown group '" + o.group + "' (expected z2, z2xz2 or z3)");
    }
}

int single_n(const Options& o) {
    const Range r = parse_range(o.n);
    if (r.lo != r.hi) throw UsageError("this command takes a single n");
    return r.lo;
}

void require_format(const Options& o, std::initializer_list<std::string_view> allowed) {
    for (auto f : allowed) {
        if (o.format == f) return;
    }
    throw UsageError("format '" + o.format + "' is not available for this command");
}

std::vector<std::string> methods_of(const Options& o, const std::string& fallback) {
    const std::string m = o.method.empty() ? fallback : o.method;
    if (m == "all") return {"formula", "inclusion-exclusion", "triangulation"};
    if (m == "formula" || m == "inclusion-exclusion" || m == "triangulation") return {m};
    throw UsageError("unknown method '" + m + "'");
}

GuardRails rails_of(const Options& o) {
    GuardRails r = GuardRails::from_env();
    r.override = r.override || o.override_guard;
    return r;
}

std::string join(const RatPoint& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + to_string(p[i]);
    return s;
}

// Degree by one route. Triangulation measures conv(vertices) in L_{G,n}.
Rat degree_by(GroupId g, int n, const std::string& method, const GuardRails& rails) {
    if (method == "formula") {
        if (n > kMaxFormulaN) throw UsageError("n above " + std::to_string(kMaxFormulaN));
        return Rat(degree(g, n));
    }
    if (method == "inclusion-exclusion") return assemble(g, n).degree;
    return lattice_volume(vertices(g, n), lattice(g, n), rails);
}

void cmd_vertices(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "ext"});
    const VPolytope v = vertices(group_of(o), single_n(o));
    if (o.format == "json") {
        out << to_json(v).dump(2) << "\n";
    } else if (o.format == "ext") {
        out << to_ext(v);
    } else {
        for (const auto& p : v.vertices) out << join(p) << "\n";
    }
}

void cmd_facets(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "ine"});
    const HPolytope h = facets(group_of(o), single_n(o));
    if (o.format == "json") {
        out << to_json(h).dump(2) << "\n";
    } else if (o.format == "ine") {
        out << to_ine(h);
    } else {
        for (const auto& hs : h.halfspaces) {
            std::string s;
            for (size_t i = 0; i < hs.normal.size(); ++i) s += (i ? " " : "") + hs.normal[i].get_str();
            out << s << " <= " << hs.offset.get_str() << "\n";
        }
    }
}

void cmd_volume(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    const GroupId g = group_of(o);
    const int n = single_n(o);
    const auto methods = methods_of(o, "triangulation");
    if (methods.size() != 1) throw UsageError("volume takes a single method");
    const GuardRails rails = rails_of(o);
    const BigInt index = lattice(g, n).index;
    json j = {{"group", std::string(group_name(g))}, {"n", n}, {"method", methods[0]}, {"index", index.get_str()}};
    Rat vol_l;
    if (methods[0] == "triangulation") {
        const Triangulation t = triangulate(vertices(g, n), rails);
        Rat vol = 0;
        for (size_t i = 0; i < t.simplices.size(); ++i) vol += simplex_lattice_volume(t.simplex(i));
        vol_l = vol / Rat(index);
        j["triangulation"] = to_json(t);
    } else {
        vol_l = degree_by(g, n, methods[0], rails);
    }
    vol_l.canonicalize();
    Rat vol_z = vol_l * Rat(index);
    vol_z.canonicalize();
    j["volume_zd"] = to_string(vol_z);
    j["volume_l"] = to_string(vol_l);
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << "volume in Z^" << ambient_dim(g, n) << "  " << to_string(vol_z) << "\n";
        out << "lattice index   " << index.get_str() << "\n";
        out << "volume in L     " << to_string(vol_l) << "\n";
    }
}

void cmd_degree(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "csv"});
    const GroupId g = group_of(o);
    const Range r = parse_range(o.n);
    const auto methods = methods_of(o, "formula");
    const GuardRails rails = rails_of(o);
    json rows = json::array();
    bool agree = true;
    for (int n = r.lo; n <= r.hi; ++n) {
        std::optional<Rat> first;
        json row = {{"group", std::string(group_name(g))}, {"n", n}};
        for (const auto& m : methods) {
            const Rat d = degree_by(g, n, m, rails);
            if (first && d != *first) agree = false;
            if (!first) first = d;
            row[m] = to_string(d);
        }
        row["degree"] = to_string(*first);
        if (methods.size() > 1) row["agree"] = agree;
        rows.push_back(row);
    }
    if (o.format == "json") {
        out << rows.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "group,n,degree\n";
        for (const auto& row : rows) {
            out << row["group"].get<std::string>() << "," << row["n"].get<int>() << ","
                << row["degree"].get<std::string>() << "\n";
        }
    } else if (methods.size() == 1 && r.lo == r.hi) {
        out << rows[0]["degree"].get<std::string>() << "\n";
    } else {
        for (const auto& row : rows) {
            out << row["n"].get<int>();
            for (const auto& m : methods) out << " " << row[m].get<std::string>();
            out << "\n";
        }
    }
    if (!agree) throw VerificationFailed("degree routes disagree");
}

json assembly_json(const Assembly& a) {
    json terms = json::array();
    for (const auto& t : a.terms) {
        terms.push_back({{"label", t.label}, {"sign", t.sign}, {"count", t.count.get_str()}, {"value", to_string(t.value)}});
    }
    return {{"group", std::string(group_name(a.group))},
            {"n", a.n},
            {"ambient", a.ambient.get_str()},
            {"terms", terms},
            {"volume", to_string(a.volume)},
            {"index", a.index.get_str()},
            {"degree", to_string(a.degree)}};
}

void cmd_assemble(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    const GroupId g = group_of(o);
    const Range r = parse_range(o.n);
    json all = json::array();
    for (int n = r.lo; n <= r.hi; ++n) {
        const Assembly a = assemble(g, n);
        if (o.format == "json") {
            all.push_back(assembly_json(a));
            continue;
        }
        out << group_name(g) << " n=" << n << "\n";
        out << "  ambient volume " << a.ambient.get_str() << "\n";
        for (const auto& t : a.terms) {
            out << "  " << (t.sign > 0 ? "+ " : "- ") << t.count.get_str() << " x " << to_string(t.value) << "  ("
                << t.label << ")\n";
        }
        out << "  volume " << to_string(a.volume) << "\n";
        out << "  degree " << to_string(a.degree) << " (volume / " << a.index.get_str() << ")\n";
    }
    if (o.format == "json") out << all.dump(2) << "\n";
}

void cmd_verify(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    const GroupId g = group_of(o);
    const Range r = parse_range(o.n);
    const auto methods = methods_of(o, "all");
    const GuardRails rails = rails_of(o);
    json rows = json::array();
    bool all_agree = true;
    for (int n = r.lo; n <= r.hi; ++n) {
        json row = {{"group", std::string(group_name(g))}, {"n", n}};
        std::optional<Rat> first;
        bool agree = true;
        for (const auto& m : methods) {
            const Rat d = degree_by(g, n, m, rails);
            row[m] = to_string(d);
            if (first && d != *first) agree = false;
            if (!first) first = d;
        }
        row["agree"] = agree;
        all_agree = all_agree && agree;
        rows.push_back(row);
    }
    if (o.format == "json") {
        out << json{{"checks", rows}, {"result", all_agree ? "pass" : "fail"}}.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            out << "verify " << row["group"].get<std::string>() << " n=" << row["n"].get<int>() << "\n";
            for (const auto& m : methods) {
                std::string label = m;
                label.resize(20, ' ');
                out << "  " << label << " " << row[m].get<std::string>() << "\n";
            }
            out << "  " << (row["agree"].get<bool>() ? "agree" : "MISMATCH") << "\n";
        }
        out << "result " << (all_agree ? "pass" : "fail") << "\n";
    }
    if (!all_agree) throw VerificationFailed("degree routes disagree");
}

void cmd_lemma(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    std::vector<LemmaId> ids;
    std::optional<GroupId> g;
    if (!o.group.empty()) g = group_of(o);
    if (!o.lemma.empty() && o.lemma != "all") {
        try {
            ids = {parse_lemma(o.lemma)};
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (g && lemma_group(ids[0]) != *g) throw UsageError("lemma " + o.lemma + " is not about " + o.group);
    } else {
        if (!g) throw UsageError("--group or --lemma is required");
        ids = lemmas_for(*g);
    }
    const Range r = parse_range(o.n);
    const GuardRails rails = rails_of(o);
    json records = json::array();
    int refuted = 0;
    std::ostringstream text;
    for (LemmaId id : ids) {
        for (int n = r.lo; n <= r.hi; ++n) {
            int ok = 0, bad = 0;
            for (const auto& claim : lemma_instances(id, n)) {
                const LemmaVerdict v = check_lemma(claim, rails);
                records.push_back(report_record(claim, v));
                if (v.confirmed) {
                    ++ok;
                } else {
                    ++bad;
                    text << "  refuted: " << claim.hypothesis << " expected " << v.expected << ", computed "
                         << v.computed << "\n";
                }
            }
            refuted += bad;
            text << lemma_name(id) << " n=" << n << " instances=" << ok + bad << " confirmed=" << ok
                 << " refuted=" << bad << "\n";
        }
    }
    if (o.format == "json") {
        out << records.dump(2) << "\n";
    } else {
        out << text.str() << "result " << (refuted == 0 ? "pass" : "fail") << "\n";
    }
    if (refuted > 0) throw VerificationFailed(std::to_string(refuted) + " lemma instance(s) refuted");
}

void cmd_table(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "csv"});
    const GroupId g = group_of(o);
    const Range r = parse_range(o.n);
    std::vector<std::pair<int, BigInt>> rows;
    try {
        rows = degree_table(g, r.lo, r.hi);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string name(group_name(g));
    if (o.format == "csv") {
        out << "group,n,degree\n";
        for (const auto& [n, d] : rows) out << name << "," << n << "," << d.get_str() << "\n";
    } else if (o.format == "json") {
        json j = json::array();
        for (const auto& [n, d] : rows) j.push_back({{"group", name}, {"n", n}, {"degree", d.get_str()}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [n, d] : rows) out << n << " " << d.get_str() << "\n";
    }
}

void add_common(CLI::App* sub, Options& o, bool needs_group) {
    auto* grp = sub->add_option("--group", o.group, "z2, z2xz2 or z3");
    if (needs_group) grp->required();
    sub->add_option("--n", o.n, "n or a range a..b")->required();
    sub->add_option("--format", o.format, "text, json, csv, ext or ine");
    sub->add_option("--output", o.output, "write the artifact to this file");
    sub->add_flag("--override-guard", o.override_guard, "lift the triangulation size limits");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Degrees of group-based phylogenetic models on claw trees", "clawdeg"};
    app.require_subcommand(1);
    using Handler = void (*)(const Options&, std::ostream&);
    std::map<CLI::App*, Handler> handlers;

    auto add = [&](const char* name, const char* desc, Handler h, bool needs_group, bool has_method) {
        CLI::App* sub = app.add_subcommand(name, desc);
        add_common(sub, o, needs_group);
        if (has_method) sub->add_option("--method", o.method, "formula, inclusion-exclusion, triangulation or all");
        handlers[sub] = h;
        return sub;
    };
    add("vertices", "vertex set of P_{G,n}", cmd_vertices, true, false);
    add("facets", "facet inequalities of P_{G,n}", cmd_facets, true, false);
    add("volume", "lattice volume of P_{G,n}", cmd_volume, true, true);
    add("degree", "phylogenetic degree", cmd_degree, true, true);
    add("assemble", "inclusion-exclusion bookkeeping", cmd_assemble, true, false);
    add("verify", "cross-check the degree routes", cmd_verify, true, true);
    add("lemma", "check cut-piece lemmas", cmd_lemma, false, false)
        ->add_option("--lemma", o.lemma, "lemma name or all");
    add("table", "degree table from the closed forms", cmd_table, true, false);

    auto fail = [&](const char* kind, const std::string& msg, int code) {
        std::string line = msg;
        std::replace(line.begin(), line.end(), '\n', ' ');
        err << "clawdeg:error:" << kind << ":" << line << "\n";
        return code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        return fail("usage", e.what(), kExitUsage);
    }

    CLI::App* chosen = app.get_subcommands().front();
    std::ostringstream buffer;
    int code = kExitOk;
    try {
        handlers.at(chosen)(o, buffer);
    } catch (const VerificationFailed& e) {
        code = fail("verification", e.what(), kExitVerificationFailed);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), kExitUsage);
    } catch (const std::invalid_argument& e) {
        return fail("usage", e.what(), kExitUsage);
    } catch (const GuardRailRefusal& e) {
        return fail("guard-rail", e.what(), kExitGuardRail);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), kExitVerificationFailed);
    }

    if (o.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f || !(f << buffer.str())) return fail("io", "cannot write " + o.output, kExitUsage);
    }
    return code;
}

}  // namespace clawdeg
