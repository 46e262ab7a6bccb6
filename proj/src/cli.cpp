#include "qtsym/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtsym/bijections.hpp"
#include "qtsym/explore.hpp"
#include "qtsym/filling.hpp"
#include "qtsym/genfunc.hpp"
#include "qtsym/lifts.hpp"
#include "qtsym/word.hpp"

namespace qtsym::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown by verbs to report a verification failure.
struct Mismatch {
    std::string text;
};

Word word_from_args(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw std::invalid_argument("missing word argument");
    if (tokens.size() == 1) return parse_word(tokens.front());
    std::string joined;
    for (const auto& t : tokens) {
        if (t.find_first_of(" \t") != std::string::npos) {
            throw std::invalid_argument("give the word as one quoted argument or one letter per argument");
        }
        joined += t;
        joined += ' ';
    }
    return parse_word(joined);
}

std::string read_text(const std::string& path, std::string_view input) {
    if (path.empty()) return std::string(input);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Specialization parse_specialization(const std::string& s) {
    if (s.empty() || s == "none") return Specialization::None;
    if (s == "q=1") return Specialization::QOne;
    if (s == "t=1") return Specialization::TOne;
    if (s == "q=0") return Specialization::QZero;
    if (s == "t=0") return Specialization::TZero;
    throw std::invalid_argument("unknown specialization '" + s + "'");
}

// Extracts the "output:" section of a symmetry witness, or returns the text
// unchanged when it is a plain filling.
std::string witness_output_section(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    bool in_output = false;
    std::string out;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line == "input:" || line == "intermediate:" || line == "output:") {
            saw_header = true;
            in_output = line == "output:";
            continue;
        }
        if (line.rfind("maj:", 0) == 0 || line.rfind("inv:", 0) == 0) {
            in_output = false;
            continue;
        }
        if (in_output) out += line + '\n';
    }
    return saw_header ? out : text;
}

Json filling_rows_json(const Filling& f) {
    auto rows = Json::array();
    for (std::size_t r = f.num_rows(); r >= 1; --r) rows.push_back(f.row(r).vec());
    return rows;
}

// Each setup registers options on `app` and stores an action producing the
// verb's standard output.
using Action = std::function<std::string()>;

void setup_stats(CLI::App& app, Action& action, std::string_view) {
    auto words = std::make_shared<std::vector<std::string>>();
    auto want_inv = std::make_shared<bool>(false);
    auto want_maj = std::make_shared<bool>(false);
    auto k = std::make_shared<std::optional<Letter>>();
    auto json = std::make_shared<bool>(false);
    app.add_option("word", *words, "word, e.g. \"5 1 3 2 4\" or 51324");
    app.add_flag("--inv", *want_inv, "inversion number");
    app.add_flag("--maj", *want_maj, "major index");
    app.add_option("--inv-k", *k, "relative k-inversion count for this k");
    app.add_flag("--json", *json);
    action = [=] {
        const Word w = word_from_args(*words);
        std::vector<std::pair<std::string, std::size_t>> values;
        const bool all = !*want_inv && !*want_maj && !k->has_value();
        if (all || *want_inv) values.emplace_back("inv", inv(w));
        if (all || *want_maj) values.emplace_back("maj", maj(w));
        if (k->has_value()) values.emplace_back("inv_k", inv_k(**k, w));
        if (*json) {
            Json doc;
            doc["word"] = format_word(w);
            for (const auto& [name, v] : values) doc[name] = v;
            if (k->has_value()) doc["k"] = **k;
            return doc.dump() + "\n";
        }
        if (values.size() == 1) return std::to_string(values.front().second) + "\n";
        std::string out;
        for (const auto& [name, v] : values) out += name + " " + std::to_string(v) + "\n";
        return out;
    };
}

void setup_lift(CLI::App& app, Action& action, std::string_view) {
    auto words = std::make_shared<std::vector<std::string>>();
    auto i = std::make_shared<Letter>(0);
    auto invert = std::make_shared<bool>(false);
    app.add_option("word", *words);
    app.add_option("--i", *i, "letter whose positions are reversed")->required();
    app.add_flag("--invert", *invert, "apply the inverse map (B_i is an involution)");
    action = [=] {
        if (*i == 0) throw std::invalid_argument("--i must be positive");
        return format_word(basement_lift(*i, word_from_args(*words))) + "\n";
    };
}

void setup_lift_range(CLI::App& app, Action& action, std::string_view) {
    auto words = std::make_shared<std::vector<std::string>>();
    auto from = std::make_shared<Letter>(0);
    auto to = std::make_shared<Letter>(0);
    auto invert = std::make_shared<bool>(false);
    app.add_option("word", *words);
    app.add_option("--from", *from)->required();
    app.add_option("--to", *to)->required();
    app.add_flag("--invert", *invert, "apply B_{to->from} instead");
    action = [=] {
        const Word w = word_from_args(*words);
        const Word out = *invert ? lift_range(*to, *from, w) : lift_range(*from, *to, w);
        return format_word(out) + "\n";
    };
}

void setup_elevate(CLI::App& app, Action& action, std::string_view) {
    auto words = std::make_shared<std::vector<std::string>>();
    auto basement = std::make_shared<std::string>();
    auto trace = std::make_shared<bool>(false);
    auto invert = std::make_shared<bool>(false);
    app.add_option("word", *words);
    app.add_option("--basement", *basement, "basement word a (at least as long as the word)")
        ->required();
    app.add_flag("--trace", *trace, "print w^(0) .. w^(n), one per line");
    app.add_flag("--invert", *invert, "recover w from psi_a(w)");
    action = [=] {
        const Word a = parse_word(*basement);
        const Word w = word_from_args(*words);
        if (*trace && *invert) throw std::invalid_argument("--trace and --invert are exclusive");
        if (*invert) return format_word(elevator_inverse(a, w)) + "\n";
        if (*trace) {
            std::string out;
            for (const Word& step : elevator_trace(a, w).steps) out += format_word(step) + "\n";
            return out;
        }
        return format_word(elevator(a, w)) + "\n";
    };
}

void setup_foata(CLI::App& app, Action& action, std::string_view) {
    auto words = std::make_shared<std::vector<std::string>>();
    auto invert = std::make_shared<bool>(false);
    app.add_option("word", *words);
    app.add_flag("--invert", *invert);
    action = [=] {
        const Word w = word_from_args(*words);
        return format_word(*invert ? foata_inverse(w) : foata(w)) + "\n";
    };
}

void setup_filling_stats(CLI::App& app, Action& action, std::string_view input) {
    auto file = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    auto triples = std::make_shared<bool>(false);
    app.add_option("--file", *file, "filling file (default: standard input)");
    app.add_flag("--json", *json);
    app.add_flag("--triples", *triples, "list inversion triple sites as 'row left right'");
    action = [=] {
        const Filling f = parse_filling(read_text(*file, input));
        std::vector<TripleSite> sites;
        for (std::size_t r = 1; r <= f.num_rows(); ++r) {
            auto row_sites = triples_in_row(f, r);
            sites.insert(sites.end(), row_sites.begin(), row_sites.end());
        }
        if (*json) {
            Json doc;
            doc["shape"] = std::vector<std::uint32_t>(f.shape().parts().begin(), f.shape().parts().end());
            doc["maj"] = maj_filling(f);
            doc["inv"] = inv_filling(f);
            doc["row_inv_sum"] = row_inv_sum(f);
            if (*triples) {
                auto arr = Json::array();
                for (const auto& s : sites) arr.push_back({s.row, s.left_col, s.right_col});
                doc["triples"] = std::move(arr);
            }
            return doc.dump() + "\n";
        }
        std::string out = "maj " + std::to_string(maj_filling(f)) + "\ninv " +
                          std::to_string(inv_filling(f)) + "\n";
        if (*triples) {
            for (const auto& s : sites) {
                out += std::to_string(s.row) + " " + std::to_string(s.left_col) + " " +
                       std::to_string(s.right_col) + "\n";
            }
        }
        return out;
    };
}

void setup_elevate_filling(CLI::App& app, Action& action, std::string_view input) {
    auto file = std::make_shared<std::string>();
    auto invert = std::make_shared<bool>(false);
    app.add_option("--file", *file);
    app.add_flag("--invert", *invert);
    action = [=] {
        const Filling f = parse_filling(read_text(*file, input));
        return format_filling(*invert ? elevator_filling_inverse(f) : elevator_filling(f));
    };
}

void setup_symmetry(CLI::App& app, Action& action, std::string_view input) {
    auto file = std::make_shared<std::string>();
    auto invert = std::make_shared<bool>(false);
    auto json = std::make_shared<bool>(false);
    app.add_option("--file", *file);
    app.add_flag("--invert", *invert, "read a filling (or a witness) of shape mu' and recover F");
    app.add_flag("--json", *json);
    action = [=] {
        const std::string text = read_text(*file, input);
        if (*invert) {
            return format_filling(symmetry_inverse(parse_filling(witness_output_section(text))));
        }
        const SymmetryWitness w = symmetry_map(parse_filling(text));
        if (*json) {
            Json doc;
            doc["input"] = filling_rows_json(w.input);
            doc["intermediate"] = filling_rows_json(w.intermediate);
            doc["output"] = filling_rows_json(w.output);
            doc["maj"] = w.maj_in;
            doc["inv"] = w.inv_out;
            return doc.dump() + "\n";
        }
        return "input:\n" + format_filling(w.input) + "intermediate:\n" +
               format_filling(w.intermediate) + "output:\n" + format_filling(w.output) +
               "maj: " + std::to_string(w.maj_in) + "\ninv: " + std::to_string(w.inv_out) + "\n";
    };
}

void setup_poly(CLI::App& app, Action& action, std::string_view) {
    auto shape = std::make_shared<std::string>();
    auto max_letter = std::make_shared<Letter>(0);
    auto threads = std::make_shared<int>(1);
    auto json = std::make_shared<bool>(false);
    auto spec = std::make_shared<std::string>();
    app.add_option("--shape", *shape, "partition, e.g. 3,1")->required();
    app.add_option("--max-letter", *max_letter, "number of x variables")->required();
    app.add_option("--parallel", *threads, "worker threads for the enumeration");
    app.add_option("--specialize", *spec, "q=1, t=1, q=0 or t=0");
    app.add_flag("--json", *json);
    action = [=] {
        if (*max_letter == 0) throw std::invalid_argument("--max-letter must be positive");
        const auto s = parse_specialization(*spec);
        const SparsePolynomial p =
            specialize(macdonald_poly(parse_partition(*shape), *max_letter, *threads), s);
        return *json ? to_json(p) + "\n" : format_polynomial(p);
    };
}

void setup_verify_symmetry(CLI::App& app, Action& action, std::string_view) {
    auto shape = std::make_shared<std::string>();
    auto max_letter = std::make_shared<Letter>(0);
    auto threads = std::make_shared<int>(1);
    auto bijective = std::make_shared<bool>(false);
    app.add_option("--shape", *shape)->required();
    app.add_option("--max-letter", *max_letter)->required();
    app.add_option("--parallel", *threads);
    app.add_flag("--bijective", *bijective, "check the bijection filling by filling");
    action = [=]() -> std::string {
        if (*max_letter == 0) throw std::invalid_argument("--max-letter must be positive");
        const Partition mu = parse_partition(*shape);
        if (*bijective) {
            const auto check = verify_bijective_q1_symmetry(mu, *max_letter, *threads);
            if (check.ok) return "ok\n";
            throw Mismatch{"mismatch: " + check.reason + "\n" + format_filling(*check.witness)};
        }
        const auto check = verify_q1_symmetry(mu, *max_letter, *threads);
        if (check.equal) return "equal\n";
        std::ostringstream os;
        os << "mismatch: t^" << check.witness->t << " x=[";
        for (std::size_t i = 0; i < check.witness->x.size(); ++i) {
            os << (i ? "," : "") << check.witness->x[i];
        }
        os << "] lhs=" << check.lhs << " rhs=" << check.rhs << "\n";
        throw Mismatch{os.str()};
    };
}

std::uint32_t orbit_cap_from_env() {
    const char* raw = std::getenv("QT_ELEVATOR_ORBIT_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultOrbitCap;
    try {
        const unsigned long v = std::stoul(raw);
        if (v == 0 || v > 20) throw std::out_of_range("cap");
        return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("QT_ELEVATOR_ORBIT_CAP must be an integer in 1..20");
    }
}

void setup_orbits(CLI::App& app, Action& action, std::string_view) {
    auto n = std::make_shared<std::uint32_t>(0);
    auto histogram = std::make_shared<bool>(false);
    auto of = std::make_shared<std::string>();
    auto threads = std::make_shared<int>(1);
    app.add_option("--n", *n, "permutation size");
    app.add_flag("--histogram", *histogram, "include the cycle length histogram");
    app.add_option("--of", *of, "print the orbit through this permutation");
    app.add_option("--parallel", *threads);
    action = [=] {
        const std::uint32_t cap = orbit_cap_from_env();
        if (!of->empty()) {
            const Word w = parse_word(*of);
            if (w.size() > cap) throw std::invalid_argument("permutation longer than the orbit cap");
            Json doc;
            auto arr = Json::array();
            for (const Word& v : orbit_of(w)) arr.push_back(format_word(v));
            doc["length"] = arr.size();
            doc["inv"] = inv(w);
            doc["orbit"] = std::move(arr);
            return doc.dump() + "\n";
        }
        if (*n == 0) throw std::invalid_argument("--n (positive) or --of is required");
        return orbit_report_json(basement_action_orbits(*n, cap, *threads), *histogram) + "\n";
    };
}

void setup_selftest(CLI::App&, Action& action, std::string_view) {
    action = []() -> std::string {
        std::string out;
        std::size_t failed = 0;
        const auto items = run_selftest();
        for (const auto& item : items) {
            out += (item.passed ? "PASS " : "FAIL ") + item.name;
            if (!item.passed) {
                out += " (" + item.detail + ")";
                ++failed;
            }
            out += "\n";
        }
        out += std::to_string(items.size() - failed) + "/" + std::to_string(items.size()) +
               " passed\n";
        if (failed > 0) throw Mismatch{out};
        return out;
    };
}

using Setup = void (*)(CLI::App&, Action&, std::string_view);

const std::vector<std::pair<std::string, std::pair<Setup, const char*>>>& verb_table() {
    static const std::vector<std::pair<std::string, std::pair<Setup, const char*>>> table{
        {"stats", {&setup_stats, "inv, maj and relative k-inversions of a word"}},
        {"lift", {&setup_lift, "basement lift map B_i"}},
        {"lift-range", {&setup_lift_range, "composition B_{from->to}"}},
        {"elevate", {&setup_elevate, "elevator map psi_a on words"}},
        {"foata", {&setup_foata, "Foata bijection (maj to inv)"}},
        {"filling-stats", {&setup_filling_stats, "maj and inv of a filling"}},
        {"elevate-filling", {&setup_elevate_filling, "elevator map on fillings"}},
        {"symmetry", {&setup_symmetry, "maj-to-inv bijection from shape mu to mu'"}},
        {"poly", {&setup_poly, "generating function of fillings on x_1..x_m"}},
        {"verify-symmetry", {&setup_verify_symmetry, "check the q=1 symmetry at a bounded alphabet"}},
        {"orbits", {&setup_orbits, "cycle structure of B_{0->n} on permutations"}},
        {"selftest", {&setup_selftest, "check the published worked examples"}},
    };
    return table;
}

std::string usage() {
    std::string out = "usage: qtsym <verb> [options]\n\nverbs:\n";
    for (const auto& [name, entry] : verb_table()) {
        out += "  " + name + std::string(18 - std::min<std::size_t>(17, name.size()), ' ') +
               entry.second + "\n";
    }
    return out;
}

}  // namespace

const std::vector<std::string>& verbs() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, entry] : verb_table()) v.push_back(name);
        return v;
    }();
    return names;
}

Result run(const std::vector<std::string>& args, std::string_view input) {
    Result result;
    if (args.empty() || args.front() == "--help" || args.front() == "-h") {
        result.exit_code = args.empty() ? kExitBadInput : kExitOk;
        (args.empty() ? result.err : result.out) = usage();
        return result;
    }
    const auto& table = verb_table();
    auto it = std::find_if(table.begin(), table.end(),
                           [&](const auto& e) { return e.first == args.front(); });
    if (it == table.end()) {
        result.exit_code = kExitUnknownVerb;
        result.err = "qtsym: unknown verb '" + args.front() + "'\n";
        return result;
    }

    CLI::App app{it->second.second, "qtsym " + it->first};
    app.allow_extras(false);
    Action action;
    it->second.first(app, action, input);

    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rest);
        result.out = action();
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
    } catch (const CLI::ParseError& e) {
        result.exit_code = kExitBadInput;
        result.err = "qtsym " + it->first + ": " + e.what() + "\n";
    } catch (const Mismatch& m) {
        result.exit_code = kExitMismatch;
        result.out = m.text;
    } catch (const std::exception& e) {
        result.exit_code = kExitBadInput;
        result.err = "qtsym " + it->first + ": " + e.what() + "\n";
    }
    return result;
}

}  // namespace qtsym::cli
