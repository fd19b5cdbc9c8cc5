#include "absirr/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <ostream>
#include <sstream>

#include "absirr/cli/specfile.hpp"
#include "absirr/cli/verify.hpp"
#include "absirr/errors.hpp"

namespace absirr::cli {

using nlohmann::json;

namespace {

constexpr long long kDefaultNmax = 4;
constexpr std::size_t kDefaultBound = 4;

// Left-aligned columns separated by two spaces.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_) {
            if (width.size() < r.size()) width.resize(r.size(), 0);
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        }
        std::ostringstream os;
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
            }
            os << line << '\n';
        }
        return os.str();
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CompletionOptions completion_options(const CommandOptions& o) {
    CompletionOptions c;
    if (o.budget) c.budget = *o.budget;
    return c;
}

FactorOptions factor_options(const CommandOptions& o) {
    FactorOptions f;
    if (o.budget) f.budget = *o.budget;
    f.parallel = o.parallel;
    return f;
}

json bounds_json(const CommandOptions& o) {
    json b = json::object();
    b["budget"] = o.budget.value_or(CompletionOptions{}.budget);
    return b;
}

json exponents_json(const Sequence& s) { return s.exponents(); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<std::string> support_labels(const ClassSet& c, const Sequence& s) {
    std::vector<std::string> out;
    for (auto i : s.support()) out.push_back(c.label(i));
    return out;
}

json witness_json(const NonAbsWitness& w, const AtomSet& atoms) {
    return json{{"n", w.n},
                {"atom", format_sequence(atoms.class_set(), atoms[w.atom])},
                {"divisor", format_sequence(atoms.class_set(), atoms[w.divisor])},
                {"trivial", format_factorization(atoms, w.trivial)},
                {"other", format_factorization(atoms, w.other)}};
}

std::string family_text(const ClassSet& c, const DivisorFamily& f) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < f.classes.size(); ++i) {
        std::string s = c.label(f.classes[i]) + std::string(f.copies[i], '\'');
        if (f.kernel_vector[i] != 1) s += "^" + f.kernel_vector[i].get_str();
        parts.push_back(s);
    }
    return join(parts, " ");
}

json family_json(const ClassSet& c, const DivisorFamily& f) {
    json members = json::array();
    for (std::size_t i = 0; i < f.classes.size(); ++i)
        members.push_back(json{{"class", c.label(f.classes[i])},
                               {"copy", f.copies[i]},
                               {"exponent", f.kernel_vector[i].get_str()}});
    return json{{"element", family_text(c, f)}, {"members", members}};
}

std::string human_header(const std::string& command, const KrullSpec& spec) {
    const auto& c = spec.class_set();
    std::vector<std::string> cls;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::string s = c.label(i);
        if (!spec.mult(i).is_one()) s += " (x" + spec.mult(i).str() + ")";
        cls.push_back(s);
    }
    return command + ": G = " + c.group().describe() + ", G0 = {" + join(cls, ", ") + "}\n";
}

}  // namespace

Sequence parse_sequence(const ClassSet& c, const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first == std::string::npos) throw SpecError("--sequence", "value", "empty sequence text");
    if (text[first] == '[') {
        json v;
        try {
            v = json::parse(text);
        } catch (const json::parse_error& e) {
            throw SpecError("--sequence", "column " + std::to_string(e.byte), "malformed exponent list");
        }
        if (!v.is_array() || v.size() != c.size())
            throw SpecError("--sequence", "value", "expected " + std::to_string(c.size()) + " exponents");
        std::vector<Exponent> e;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number_integer() || v[i].get<long long>() < 0)
                throw SpecError("--sequence", "[" + std::to_string(i) + "]", "expected a nonnegative integer");
            e.push_back(v[i].get<long long>());
        }
        return Sequence(e);
    }
    std::istringstream in(text);
    std::string tok;
    Sequence s = Sequence::empty(c.size());
    while (in >> tok) {
        Exponent k = 1;
        std::string label = tok;
        if (auto p = tok.rfind('^'); p != std::string::npos) {
            label = tok.substr(0, p);
            const std::string num = tok.substr(p + 1);
            if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
                num.size() > 9)
                throw SpecError("--sequence", tok, "expected label^k with k a nonnegative integer");
            k = std::stoll(num);
        }
        const auto idx = c.index_of_label(label);
        if (!idx) {
            if (tok == "1") continue;
            throw SpecError("--sequence", tok, "unknown class label \"" + label + "\"");
        }
        s = s * Sequence::single(c.size(), *idx, k);
    }
    return s;
}

std::string render_machine(const json& report) { return report.dump(2) + "\n"; }

CommandOutput cmd_atoms(const KrullSpec& spec, const CommandOptions& opts) {
    const auto& c = spec.class_set();
    const auto atoms = enumerate_atoms(c, completion_options(opts));
    json list = json::array();
    Table t({"#", "atom", "length", "support", "abs-irred", "prime"});
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& u = atoms[i];
        const bool abs = is_absirred_support(u, atoms);
        const bool prime = u.length() == 1;  // the sequence 0
        json a{{"index", i},
               {"exponents", exponents_json(u)},
               {"sequence", format_sequence(c, u)},
               {"length", u.length()},
               {"support", support_labels(c, u)},
               {"absolutely_irreducible", abs},
               {"prime", prime}};
        if (!abs) a["witness"] = witness_json(*witness_non_absirred(u, atoms, factor_options(opts)), atoms);
        list.push_back(a);
        t.add({std::to_string(i), format_sequence(c, u), std::to_string(u.length()),
               join(support_labels(c, u), " "), yes_no(abs), yes_no(prime)});
    }
    const auto& cert = atoms.certificate();
    CommandOutput out;
    out.report = json{{"command", "atoms"},
                      {"inputs", {{"spec", spec_to_json(spec)}}},
                      {"bounds", bounds_json(opts)},
                      {"results",
                       {{"level", "block monoid B(G0)"},
                        {"count", atoms.size()},
                        {"atoms", list},
                        {"certificate",
                         {{"method", cert.method},
                          {"unknowns", cert.unknowns},
                          {"slack_columns", cert.slack_columns},
                          {"levels", cert.levels},
                          {"nodes", cert.nodes}}}}}};
    out.human = human_header("atoms", spec) + t.str() + std::to_string(atoms.size()) + " atoms (" + cert.method +
                ", " + std::to_string(cert.nodes) + " nodes)\n";
    return out;
}

CommandOutput cmd_factor(const KrullSpec& spec, const Sequence& s, const CommandOptions& opts) {
    const auto& c = spec.class_set();
    const auto atoms = enumerate_atoms(c, completion_options(opts));
    const auto fs = factorizations(s, atoms, factor_options(opts));
    json list = json::array();
    std::set<std::size_t> lengths;
    Table t({"#", "length", "factorization"});
    for (std::size_t i = 0; i < fs.size(); ++i) {
        list.push_back(json{{"atoms", fs[i].atoms}, {"length", fs[i].length()},
                            {"text", format_factorization(atoms, fs[i])}});
        lengths.insert(fs[i].length());
        t.add({std::to_string(i), std::to_string(fs[i].length()), format_factorization(atoms, fs[i])});
    }
    mpq_class rho = 1;
    if (!lengths.empty() && *lengths.begin() > 0) rho = mpq_class(*lengths.rbegin(), *lengths.begin());
    rho.canonicalize();
    std::vector<std::string> lstr;
    for (auto l : lengths) lstr.push_back(std::to_string(l));
    CommandOutput out;
    out.report = json{{"command", "factor"},
                      {"inputs", {{"spec", spec_to_json(spec)}, {"sequence", exponents_json(s)}}},
                      {"bounds", bounds_json(opts)},
                      {"results",
                       {{"sequence", format_sequence(c, s)},
                        {"count", fs.size()},
                        {"factorizations", list},
                        {"length_set", lengths},
                        {"elasticity", rho.get_str()}}}};
    out.human = human_header("factor", spec) + "sequence: " + format_sequence(c, s) + "\n" + t.str() +
                "lengths: {" + join(lstr, ", ") + "}, elasticity " + rho.get_str() + "\n";
    return out;
}

CommandOutput cmd_lengths(const KrullSpec& spec, const Sequence& s, const CommandOptions& opts) {
    const auto& c = spec.class_set();
    const auto atoms = enumerate_atoms(c, completion_options(opts));
    const auto lengths = length_set(s, atoms, factor_options(opts));
    const auto rho = elasticity(s, atoms, factor_options(opts));
    std::vector<std::string> lstr;
    for (auto l : lengths) lstr.push_back(std::to_string(l));
    CommandOutput out;
    out.report = json{{"command", "lengths"},
                      {"inputs", {{"spec", spec_to_json(spec)}, {"sequence", exponents_json(s)}}},
                      {"bounds", bounds_json(opts)},
                      {"results",
                       {{"sequence", format_sequence(c, s)}, {"length_set", lengths}, {"elasticity", rho.get_str()}}}};
    out.human = human_header("lengths", spec) + "sequence: " + format_sequence(c, s) + "\nlengths: {" +
                join(lstr, ", ") + "}, elasticity " + rho.get_str() + "\n";
    return out;
}

CommandOutput cmd_absirred(const KrullSpec& spec, const Sequence& s, const CommandOptions& opts) {
    const auto& c = spec.class_set();
    const auto atoms = enumerate_atoms(c, completion_options(opts));
    atoms.require_index(s);
    const long long nmax = opts.nmax.value_or(kDefaultNmax);
    if (nmax < 1) throw InvalidArgument("--nmax must be at least 1");
    std::vector<GroupElement> supp;
    for (auto i : s.support()) supp.push_back(c[i]);
    const bool by_support = is_absirred_support(s, atoms);
    const bool by_kernel = is_absirred_kernel(c.group(), supp);
    const auto w = witness_non_absirred(s, atoms, factor_options(opts));
    const bool brute = brute_force_absirred(s, atoms, nmax, factor_options(opts));
    json results{{"sequence", format_sequence(c, s)},
                 {"support_criterion", by_support},
                 {"kernel_criterion", by_kernel},
                 {"witness", w ? witness_json(*w, atoms) : json(nullptr)},
                 {"brute_force", {{"n_max", nmax}, {"absolutely_irreducible", brute}}},
                 {"agree", by_support == by_kernel && by_support == !w.has_value() && (!by_support || brute)}};
    CommandOutput out;
    json bounds = bounds_json(opts);
    bounds["nmax"] = nmax;
    out.report = json{{"command", "absirred"},
                      {"inputs", {{"spec", spec_to_json(spec)}, {"sequence", exponents_json(s)}}},
                      {"bounds", bounds},
                      {"results", results}};
    Table t({"test", "absolutely irreducible"});
    t.add({"support criterion", yes_no(by_support)});
    t.add({"kernel criterion", yes_no(by_kernel)});
    t.add({"witness search", yes_no(!w)});
    t.add({"brute force n <= " + std::to_string(nmax), yes_no(brute)});
    out.human = human_header("absirred", spec) + "atom: " + format_sequence(c, s) + "\n" + t.str();
    if (w)
        out.human += "witness: [" + format_sequence(c, s) + "]^" + std::to_string(w->n) + " = " +
                     format_factorization(atoms, w->other) + "\n";
    return out;
}

CommandOutput cmd_classify(const KrullSpec& spec, const CommandOptions& opts) {
    const auto& c = spec.class_set();
    ScenarioBounds b;
    b.support_bound = opts.bound.value_or(kDefaultBound);
    b.completion = completion_options(opts);
    b.factor = factor_options(opts);
    const auto rep = classify_scenario(spec, b);

    json results{{"row", rep.row_label},
                 {"has_nonabsirred", presence_name(rep.has_nonabsirred)},
                 {"has_absirred_nonprime", presence_name(rep.has_absirred_nonprime)},
                 {"has_prime", presence_name(rep.has_prime)},
                 {"mult_cap", rep.mult_cap},
                 {"mult_capped", rep.mult_capped},
                 {"family_semantics", rep.family_semantics},
                 {"notes", rep.notes}};
    results["absirred_nonprime_witness"] =
        rep.absirred_nonprime_witness ? family_json(c, *rep.absirred_nonprime_witness) : json(nullptr);
    results["block_witness"] = nullptr;
    if (rep.block_witness) results["block_witness"] = witness_json(*rep.block_witness, enumerate_atoms(c, b.completion));
    results["lifted_witness"] = nullptr;
    if (rep.lifted_witness) {
        const auto& lw = *rep.lifted_witness;
        const auto& d = lw.divisors;
        results["lifted_witness"] = json{{"class", c.label(lw.cls)},
                                         {"a", format_sequence(d, lw.a)},
                                         {"b", format_sequence(d, lw.b)},
                                         {"n", lw.b_witness.n},
                                         {"b_power", format_factorization(lw.divisor_atoms, lw.b_witness.other)}};
    }
    json bounds = bounds_json(opts);
    bounds["support_bound"] = b.support_bound;

    CommandOutput out;
    out.report = json{{"command", "classify"},
                      {"inputs", {{"spec", spec_to_json(spec)}}},
                      {"bounds", bounds},
                      {"results", results}};
    Table t({"column", "status", "witness"});
    std::string w1 = "-";
    if (rep.block_witness) w1 = results["block_witness"]["other"].get<std::string>();
    if (rep.lifted_witness)
        w1 = "a = " + results["lifted_witness"]["a"].get<std::string>() + " divides b^2, b = " +
             results["lifted_witness"]["b"].get<std::string>();
    t.add({"non-abs-irred", presence_symbol(rep.has_nonabsirred), w1});
    t.add({"abs-irred non-prime", presence_symbol(rep.has_absirred_nonprime),
           rep.absirred_nonprime_witness ? family_text(c, *rep.absirred_nonprime_witness) : "-"});
    t.add({"prime", presence_symbol(rep.has_prime), "-"});
    out.human = human_header("classify", spec) + t.str() + "row " + rep.row_label +
                " (support bound " + std::to_string(b.support_bound) + ")\n";
    for (const auto& n : rep.notes) out.human += "note: " + n + "\n";
    return out;
}

CommandOutput cmd_verify(const CommandOptions& opts) {
    const auto checks = run_verify_suite(opts);
    json list = json::array();
    std::size_t failed = 0;
    Table t({"group", "check", "expected", "actual", "ok"});
    for (const auto& ch : checks) {
        list.push_back(json{{"group", ch.group}, {"name", ch.name}, {"expected", ch.expected},
                            {"actual", ch.actual}, {"pass", ch.pass()}});
        if (!ch.pass()) ++failed;
        t.add({ch.group, ch.name, ch.expected, ch.actual, ch.pass() ? "ok" : "MISMATCH"});
    }
    CommandOutput out;
    out.exit_code = failed ? kExitMismatch : kExitOk;
    out.report = json{{"command", "verify"},
                      {"inputs", json::object()},
                      {"bounds", bounds_json(opts)},
                      {"results", {{"checks", list}, {"passed", checks.size() - failed}, {"failed", failed}}}};
    out.human = t.str() + std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
                " checks passed\n";
    return out;
}

int run_command(const std::string& command, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    try {
        CommandOutput res;
        if (command == "verify") {
            res = cmd_verify(opts);
        } else {
            if (!opts.spec_path) throw InvalidArgument(command + " needs --spec");
            const KrullSpec spec = load_spec_file(*opts.spec_path);
            const auto need_sequence = [&]() {
                if (!opts.sequence) throw InvalidArgument(command + " needs --sequence");
                return parse_sequence(spec.class_set(), *opts.sequence);
            };
            if (command == "atoms")
                res = cmd_atoms(spec, opts);
            else if (command == "factor")
                res = cmd_factor(spec, need_sequence(), opts);
            else if (command == "lengths")
                res = cmd_lengths(spec, need_sequence(), opts);
            else if (command == "absirred")
                res = cmd_absirred(spec, need_sequence(), opts);
            else if (command == "classify")
                res = cmd_classify(spec, opts);
            else
                throw InvalidArgument("unknown command " + command);
        }
        if (opts.machine) {
            out << render_machine(res.report);
        } else {
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
            out << res.human << "time: " << ms << " ms\n";
        }
        return res.exit_code;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace absirr::cli
