#include "leibcoh/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "leibcoh/errors.hpp"
#include "leibcoh/rational.hpp"

namespace leibcoh {
namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("missing file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw InputError("unreadable file: " + path);
    return ss.str();
}

ojson parse_json(const std::string& text, const std::string& origin) {
    try {
        return ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw ParseError("malformed JSON in " + origin + ": " + e.what());
    }
}

std::pair<std::string, std::string> split_pair_key(const std::string& key,
                                                   const std::string& origin) {
    const auto at = key.find(',');
    if (at == std::string::npos || at == 0 || at + 1 == key.size() ||
        key.find(',', at + 1) != std::string::npos)
        throw ParseError("key \"" + key + "\" in " + origin +
                         " is not of the form \"labelA,labelB\"");
    return {key.substr(0, at), key.substr(at + 1)};
}

long resolve_label(const AlgebraPresentation& g, const std::string& label,
                   const std::string& where) {
    try {
        return g.index_of(label);
    } catch (const InputError&) {
        throw InputError("unknown basis label \"" + label + "\" in " + where);
    }
}

Rational coefficient(const ojson& v, const std::string& where) {
    if (v.is_number_integer())
        return Rational(static_cast<long>(v.get<long long>()));
    if (!v.is_string())
        throw ParseError("unparsable coefficient in " + where +
                         ": expected a rational string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError("unparsable coefficient in " + where + ": " + e.what());
    }
}

const ojson& field(const ojson& doc, const std::string& name,
                   const std::string& origin) {
    auto it = doc.find(name);
    if (it == doc.end())
        throw InputError("missing field \"" + name + "\" in " + origin);
    return *it;
}

std::string bracket_where(const std::string& key) {
    return "bracket \"" + key + "\"";
}

} // namespace

AlgebraPresentation parse_algebra_text(const std::string& text,
                                       const std::string& origin) {
    const ojson doc = parse_json(text, origin);
    if (!doc.is_object())
        throw ParseError("algebra document " + origin + " is not a JSON object");
    static const std::vector<std::string> known = {
        "name", "kind", "basis", "grading", "windowed",
        "window", "brackets", "out_of_window"};
    for (const auto& [key, val] : doc.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw InputError("unknown field \"" + key + "\" in " + origin);

    const ojson& jname = field(doc, "name", origin);
    if (!jname.is_string()) throw InputError("field \"name\" must be a string");
    const ojson& jkind = field(doc, "kind", origin);
    if (!jkind.is_string() ||
        (jkind.get<std::string>() != "lie" && jkind.get<std::string>() != "leibniz"))
        throw InputError("field \"kind\" must be \"lie\" or \"leibniz\"");
    const AlgebraKind kind =
        jkind.get<std::string>() == "lie" ? AlgebraKind::lie : AlgebraKind::leibniz;

    const ojson& jbasis = field(doc, "basis", origin);
    if (!jbasis.is_array()) throw InputError("field \"basis\" must be an array");
    std::vector<std::string> basis;
    basis.reserve(jbasis.size());
    for (const ojson& b : jbasis) {
        if (!b.is_string())
            throw InputError("basis labels must be strings in " + origin);
        if (b.get<std::string>().find(',') != std::string::npos)
            throw InputError("basis label \"" + b.get<std::string>() +
                             "\" contains a comma");
        basis.push_back(b.get<std::string>());
    }

    AlgebraPresentation a(jname.get<std::string>(), kind, std::move(basis));

    if (auto it = doc.find("grading"); it != doc.end()) {
        if (!it->is_object())
            throw GradingError("field \"grading\" must be an object");
        for (const auto& [label, val] : it->items())
            resolve_label(a, label, "grading");
        std::vector<Degree> degrees;
        degrees.reserve(static_cast<std::size_t>(a.dim()));
        for (long i = 0; i < a.dim(); ++i) {
            auto d = it->find(a.label(i));
            if (d == it->end())
                throw GradingError("grading omits basis label \"" + a.label(i) + "\"");
            if (d->is_number_integer()) {
                degrees.push_back({d->get<long>()});
            } else if (d->is_array() && d->size() == 2 &&
                       (*d)[0].is_number_integer() && (*d)[1].is_number_integer()) {
                degrees.push_back({(*d)[0].get<long>(), (*d)[1].get<long>()});
            } else {
                throw GradingError("degree of \"" + a.label(i) +
                                   "\" must be an integer or [int, int]");
            }
        }
        a.set_grading(std::move(degrees));
    }

    if (auto it = doc.find("brackets"); it != doc.end()) {
        if (!it->is_object())
            throw InputError("field \"brackets\" must be an object");
        std::vector<char> seen;
        if (kind == AlgebraKind::lie)
            seen.assign(static_cast<std::size_t>(a.dim() * a.dim()), 0);
        for (const auto& [key, val] : it->items()) {
            const std::string where = bracket_where(key);
            const auto [la, lb] = split_pair_key(key, "brackets");
            const long i = resolve_label(a, la, where);
            const long j = resolve_label(a, lb, where);
            if (kind == AlgebraKind::lie) {
                const long lo = std::min(i, j), hi = std::max(i, j);
                if (seen[static_cast<std::size_t>(lo * a.dim() + hi)])
                    throw InputError("both orientations of the pair {" + la + "," +
                                     lb + "} appear in a lie presentation");
                seen[static_cast<std::size_t>(lo * a.dim() + hi)] = 1;
            }
            if (!val.is_object())
                throw InputError(where + " must map result labels to coefficients");
            for (const auto& [rlabel, coeff] : val.items()) {
                const long k = resolve_label(a, rlabel, where);
                a.add_bracket_term(i, j, k, coefficient(coeff, where));
            }
        }
    }

    if (auto it = doc.find("out_of_window"); it != doc.end()) {
        if (!it->is_array())
            throw InputError("field \"out_of_window\" must be an array");
        for (const ojson& p : *it) {
            if (!p.is_string())
                throw InputError("out_of_window entries must be \"labelA,labelB\" strings");
            const auto [la, lb] = split_pair_key(p.get<std::string>(), "out_of_window");
            a.set_out_of_window(resolve_label(a, la, "out_of_window"),
                                resolve_label(a, lb, "out_of_window"));
        }
        a.set_windowed(true);
    }

    if (auto it = doc.find("windowed"); it != doc.end()) {
        if (!it->is_boolean())
            throw InputError("field \"windowed\" must be a boolean");
        if (it->get<bool>()) a.set_windowed(true);
    }
    if (auto it = doc.find("window"); it != doc.end()) {
        if (!it->is_object() || !it->contains("radius") ||
            !(*it)["radius"].is_number_integer())
            throw InputError("field \"window\" must be {\"radius\": int, ...}");
        WindowInfo info;
        info.radius = (*it)["radius"].get<long>();
        if (auto s = it->find("degree_saturated"); s != it->end()) {
            if (!s->is_boolean())
                throw InputError("\"degree_saturated\" must be a boolean");
            info.degree_saturated = s->get<bool>();
        }
        a.set_window(info);
    }
    return a;
}

AlgebraPresentation parse_algebra(const std::string& path) {
    return parse_algebra_text(read_file(path), path);
}

std::string algebra_to_json(const AlgebraPresentation& a) {
    for (const std::string& l : a.basis())
        if (l.find(',') != std::string::npos)
            throw InputError("basis label \"" + l + "\" contains a comma");
    ojson doc;
    doc["name"] = a.name();
    doc["kind"] = a.kind() == AlgebraKind::lie ? "lie" : "leibniz";
    doc["basis"] = a.basis();
    if (a.graded()) {
        ojson grading;
        for (long i = 0; i < a.dim(); ++i) {
            const Degree& d = a.degree(i);
            if (a.grading_arity() == 1)
                grading[a.label(i)] = d[0];
            else
                grading[a.label(i)] = ojson::array({d[0], d[1]});
        }
        doc["grading"] = std::move(grading);
    }
    if (a.windowed()) {
        doc["windowed"] = true;
        if (a.window()) {
            doc["window"] = {{"radius", a.window()->radius},
                             {"degree_saturated", a.window()->degree_saturated}};
        }
    }
    ojson brackets = ojson::object();
    ojson out = ojson::array();
    const bool lie = a.kind() == AlgebraKind::lie;
    for (long i = 0; i < a.dim(); ++i) {
        for (long j = lie ? i + 1 : 0; j < a.dim(); ++j) {
            const std::string key = a.label(i) + "," + a.label(j);
            if (!a.in_window(i, j)) {
                out.push_back(key);
                continue;
            }
            const SparseVector& v = a.bracket(i, j);
            if (v.is_zero()) continue;
            std::vector<Entry> entries(v.entries().begin(), v.entries().end());
            std::sort(entries.begin(), entries.end(),
                      [](const Entry& x, const Entry& y) { return x.col < y.col; });
            ojson terms;
            for (const Entry& e : entries)
                terms[a.label(e.col)] = rational_string(e.val);
            brackets[key] = std::move(terms);
        }
    }
    doc["brackets"] = std::move(brackets);
    if (!out.empty()) doc["out_of_window"] = std::move(out);
    return doc.dump(2) + "\n";
}

void emit_algebra(const AlgebraPresentation& a, const std::string& path) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw InputError("cannot write file: " + path);
    outf << algebra_to_json(a);
    if (!outf) throw InputError("cannot write file: " + path);
}

bool same_presentation(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.name() != b.name() || a.kind() != b.kind() || a.basis() != b.basis())
        return false;
    if (a.graded() != b.graded() || a.windowed() != b.windowed()) return false;
    if (a.graded()) {
        if (a.grading_arity() != b.grading_arity()) return false;
        for (long i = 0; i < a.dim(); ++i)
            if (a.degree(i) != b.degree(i)) return false;
    }
    if (a.window().has_value() != b.window().has_value()) return false;
    if (a.window() &&
        (a.window()->radius != b.window()->radius ||
         a.window()->degree_saturated != b.window()->degree_saturated))
        return false;
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j) {
            if (a.in_window(i, j) != b.in_window(i, j)) return false;
            if (a.in_window(i, j) && !(a.bracket(i, j) == b.bracket(i, j)))
                return false;
        }
    return true;
}

std::vector<PairEntry> parse_pair_map_text(const std::string& text,
                                           const std::string& origin,
                                           const AlgebraPresentation& g) {
    const ojson doc = parse_json(text, origin);
    if (!doc.is_object())
        throw ParseError("pair map " + origin + " is not a JSON object");
    std::vector<PairEntry> entries;
    entries.reserve(doc.size());
    for (const auto& [key, val] : doc.items()) {
        const std::string where = "entry \"" + key + "\" of " + origin;
        const auto [la, lb] = split_pair_key(key, origin);
        PairEntry e;
        e.i = resolve_label(g, la, where);
        e.j = resolve_label(g, lb, where);
        e.val = coefficient(val, where);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<PairEntry> parse_pair_map(const std::string& path,
                                      const AlgebraPresentation& g) {
    return parse_pair_map_text(read_file(path), path, g);
}

std::string pair_map_to_json(std::vector<PairEntry> entries,
                             const AlgebraPresentation& g) {
    std::sort(entries.begin(), entries.end(),
              [](const PairEntry& a, const PairEntry& b) {
                  return a.i != b.i ? a.i < b.i : a.j < b.j;
              });
    ojson doc = ojson::object();
    for (const PairEntry& e : entries) {
        if (e.val == 0) continue;
        doc[g.label(e.i) + "," + g.label(e.j)] = rational_string(e.val);
    }
    return doc.dump(2) + "\n";
}

void emit_pair_map(const std::vector<PairEntry>& entries,
                   const AlgebraPresentation& g, const std::string& path) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw InputError("cannot write file: " + path);
    outf << pair_map_to_json(entries, g);
    if (!outf) throw InputError("cannot write file: " + path);
}

} // namespace leibcoh
