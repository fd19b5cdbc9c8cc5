#include "absirr/cli/specfile.hpp"

#include <fstream>
#include <sstream>

namespace absirr::cli {

using nlohmann::json;

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

struct Reader {
    std::string source;

    [[noreturn]] void fail(const std::string& where, const std::string& msg) const {
        throw SpecError(source, where, msg);
    }

    Integer integer(const json& v, const std::string& where) const {
        if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
        if (v.is_string()) {
            Integer out;
            if (out.set_str(v.get<std::string>(), 10) == 0) return out;
        }
        fail(where, "expected an integer");
    }

    const json& array(const json& obj, const std::string& key, const std::string& where) const {
        if (!obj.contains(key)) fail(where, "missing field \"" + key + "\"");
        const json& v = obj.at(key);
        if (!v.is_array()) fail(where + "." + key, "expected an array");
        return v;
    }
};

json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

}  // namespace

KrullSpec parse_spec(const std::string& text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        // Drop the library prefix "[json.exception...] parse error at line L, column C: ".
        if (auto c = msg.find("column"); c != std::string::npos)
            if (auto p = msg.find(": ", c); p != std::string::npos) msg = msg.substr(p + 2);
        throw SpecError(source, line_col(text, e.byte == 0 ? 0 : e.byte - 1), msg);
    }
    const Reader r{source};
    if (!doc.is_object()) r.fail("top level", "expected an object");
    for (const auto& [key, _] : doc.items())
        if (key != "group" && key != "classes" && key != "labels" && key != "mult")
            r.fail(key, "unknown field");

    if (!doc.contains("group") || !doc["group"].is_object()) r.fail("group", "expected an object");
    const json& g = doc["group"];
    for (const auto& [key, _] : g.items())
        if (key != "free_rank" && key != "torsion") r.fail("group." + key, "unknown field");
    std::size_t free_rank = 0;
    if (g.contains("free_rank")) {
        const json& f = g["free_rank"];
        if (!f.is_number_integer() || f.get<long>() < 0 || f.get<long>() > 64)
            r.fail("group.free_rank", "expected an integer in [0, 64]");
        free_rank = f.get<std::size_t>();
    }
    std::vector<Integer> torsion;
    if (g.contains("torsion")) {
        const json& t = r.array(g, "torsion", "group");
        for (std::size_t i = 0; i < t.size(); ++i) {
            const std::string where = "group.torsion[" + std::to_string(i) + "]";
            torsion.push_back(r.integer(t[i], where));
            if (torsion.back() < 2) r.fail(where, "torsion orders must be at least 2");
        }
    }
    const FinGenAbelianGroup group(free_rank, torsion);

    const json& cls = r.array(doc, "classes", "top level");
    if (cls.empty()) r.fail("classes", "at least one class is required");
    std::vector<GroupElement> classes;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const std::string where = "classes[" + std::to_string(i) + "]";
        if (!cls[i].is_array()) r.fail(where, "expected an array of coordinates");
        if (cls[i].size() != group.dimension())
            r.fail(where, "expected " + std::to_string(group.dimension()) + " coordinates, got " +
                              std::to_string(cls[i].size()));
        IntVector coords;
        for (std::size_t j = 0; j < cls[i].size(); ++j)
            coords.push_back(r.integer(cls[i][j], where + "[" + std::to_string(j) + "]"));
        classes.push_back(group.element(coords));
        for (std::size_t k = 0; k < i; ++k)
            if (classes[k] == classes[i])
                r.fail(where, "duplicate class (same as classes[" + std::to_string(k) + "] after reduction)");
    }

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const json& l = r.array(doc, "labels", "top level");
        if (l.size() != classes.size()) r.fail("labels", "expected one label per class");
        for (std::size_t i = 0; i < l.size(); ++i) {
            const std::string where = "labels[" + std::to_string(i) + "]";
            if (!l[i].is_string() || l[i].get<std::string>().empty()) r.fail(where, "expected a nonempty string");
            const auto s = l[i].get<std::string>();
            if (s.find_first_of(" \t\n^") != std::string::npos || s.front() == '[')
                r.fail(where, "labels may not contain whitespace or '^', nor start with '['");
            for (std::size_t k = 0; k < i; ++k)
                if (labels[k] == s) r.fail(where, "duplicate label");
            labels.push_back(s);
        }
    }

    std::vector<Multiplicity> mult(classes.size(), Multiplicity::finite(1));
    if (doc.contains("mult")) {
        const json& m = r.array(doc, "mult", "top level");
        if (m.size() != classes.size()) r.fail("mult", "expected one multiplicity per class");
        for (std::size_t i = 0; i < m.size(); ++i) {
            const std::string where = "mult[" + std::to_string(i) + "]";
            if (m[i].is_string() && m[i].get<std::string>() == "inf") {
                mult[i] = Multiplicity::infinite();
            } else if (m[i].is_number_integer() && m[i].get<long long>() >= 1) {
                mult[i] = Multiplicity::finite(m[i].get<std::uint64_t>());
            } else {
                r.fail(where, "expected a positive integer or \"inf\"");
            }
        }
    }

    try {
        return KrullSpec(ClassSet(group, classes, labels), mult);
    } catch (const InvalidArgument& e) {
        r.fail("top level", e.what());
    }
}

KrullSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError(path, "file", "cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str(), path);
}

json spec_to_json(const KrullSpec& spec) {
    const auto& c = spec.class_set();
    const auto& g = c.group();
    json torsion = json::array();
    for (const auto& t : g.torsion()) torsion.push_back(integer_json(t));
    json classes = json::array();
    for (const auto& e : c.classes()) {
        json coords = json::array();
        for (const auto& x : e.free_part()) coords.push_back(integer_json(x));
        for (const auto& x : e.torsion_part()) coords.push_back(integer_json(x));
        classes.push_back(coords);
    }
    json mult = json::array();
    for (const auto& m : spec.multiplicities()) {
        if (m.is_infinite())
            mult.push_back("inf");
        else
            mult.push_back(*m.count);
    }
    return json{{"group", {{"free_rank", g.free_rank()}, {"torsion", torsion}}},
                {"classes", classes},
                {"labels", c.labels()},
                {"mult", mult}};
}

std::string emit_spec(const KrullSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

}  // namespace absirr::cli
