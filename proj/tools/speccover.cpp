#include <speccover/speccover.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace speccover;

namespace {

enum Exit { ok = 0, absent = 1, input_error = 2, inadmissible = 3 };

struct InputError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write " + path);
}

CnfMatrix load_cnf(const std::string& path) { return parse_dimacs(read_file(path)); }

BoolTuple parse_bits(const std::string& bits, std::size_t n, const char* what) {
    if (bits.size() != n)
        throw InputError(std::string(what) + " has " + std::to_string(bits.size()) +
                         " bits, expected " + std::to_string(n));
    return BoolTuple::from_string(bits);
}

std::string counts_line(const Trace& tr) {
    const auto& c = tr.counts;
    const auto& e = c.elementary;
    std::ostringstream ss;
    ss << "steps " << c.steps() << " (rm " << c.removals << ", add " << c.additions << ", mv "
       << c.moves << ", flip " << c.flips << "); elementary " << e.total() << " (assign "
       << e.assignments << ", add " << e.additions << ", cmp " << e.comparisons << ", recog "
       << e.recognitions << ")";
    return ss.str();
}

int cmd_decompose(const std::string& in, const std::string& out) {
    write_output(out, emit_decomposition(cnf_to_decomposition(load_cnf(in))));
    return ok;
}

int cmd_synthesize(const std::string& in, const std::string& out) {
    write_output(out, emit_dimacs(decomposition_to_cnf(parse_decomposition(read_file(in)))));
    return ok;
}

int cmd_cover(const std::string& in, bool prune, bool all) {
    const Decomposition d = parse_decomposition(read_file(in));
    if (all) {
        const auto found = all_coverings(d);
        for (const auto& t : found) std::cout << t.to_string() << '\n';
        return found.empty() ? absent : ok;
    }
    if (prune) {
        const auto report = forced_subsets(d);
        for (const auto& [i, alpha] : report.forced)
            std::cout << "c forced " << i + 1 << ' ' << alpha << '\n';
        if (report.contradiction)
            std::cout << "c contradiction at pair " << *report.contradiction + 1 << '\n';
    }
    const auto w = find_covering(d, prune);
    if (!w) {
        std::cout << "none\n";
        return absent;
    }
    std::cout << w->tuple.to_string() << '\n';
    return ok;
}

int cmd_sat(const std::string& in, bool all) {
    const CnfMatrix f = load_cnf(in);
    if (all) {
        const auto found = satisfying_assignments(f);
        for (const auto& t : found) std::cout << t.to_string() << '\n';
        return found.empty() ? absent : ok;
    }
    const auto t = first_satisfying(f);
    if (!t) {
        std::cout << "unsatisfiable\n";
        return absent;
    }
    std::cout << t->to_string() << '\n';
    return ok;
}

struct TransformArgs {
    std::string f, h, sigma, delta, out;
    bool autopick = false;
    bool extended = false;
};

int cmd_transform(const TransformArgs& a) {
    const CnfMatrix f = load_cnf(a.f);
    const CnfMatrix h = load_cnf(a.h);
    const std::size_t n = f.variable_count();
    Trace tr;
    if (a.extended) {
        std::optional<BoolTuple> sigma, delta;
        if (!a.sigma.empty()) sigma = parse_bits(a.sigma, n, "--sigma");
        else sigma = first_satisfying(f);
        if (!a.delta.empty()) delta = parse_bits(a.delta, h.variable_count(), "--delta");
        else delta = first_satisfying(h);
        if (!sigma || !delta) {
            std::cerr << "speccover: " << (sigma ? a.h : a.f) << " is unsatisfiable\n";
            return absent;
        }
        tr = generate_trace_extended(f, *sigma, h, *delta);
    } else {
        std::optional<BoolTuple> sigma;
        if (!a.sigma.empty()) {
            sigma = parse_bits(a.sigma, n, "--sigma");
        } else {
            sigma = common_satisfying(f, h);
            if (!sigma) {
                std::cerr << "speccover: no common satisfying assignment\n";
                return absent;
            }
        }
        tr = generate_trace(f, h, *sigma);
    }
    write_output(a.out, emit_trace(tr));
    std::cerr << counts_line(tr) << '\n';
    return ok;
}

int cmd_apply(const std::string& fpath, const std::string& tpath, const std::string& out) {
    const CnfMatrix f = load_cnf(fpath);
    const Trace tr = parse_trace(read_file(tpath));
    write_output(out, emit_dimacs(replay(f, tr)));
    return ok;
}

int cmd_verify(const std::string& fpath, const std::string& tpath) {
    const CnfMatrix f = load_cnf(fpath);
    const Trace tr = parse_trace(read_file(tpath));
    BoolTuple last = tr.initial;
    replay(f, tr, [&](std::size_t, const Decomposition&, const BoolTuple& t) { last = t; });
    std::cout << "ok " << tr.steps.size() << " steps, final tuple " << last.to_string() << '\n';
    return ok;
}

int cmd_classes(const std::string& dir, const std::string& bits) {
    if (!fs::is_directory(dir)) throw InputError(dir + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".cnf")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    struct Member {
        std::string name;
        CnfMatrix f;
    };
    std::vector<std::vector<Member>> classes;
    std::vector<std::string> outside;
    for (const auto& p : files) {
        CnfMatrix f = load_cnf(p.string());
        const BoolTuple sigma = parse_bits(bits, f.variable_count(), "--sigma");
        if (!evaluate(f, sigma)) {
            outside.push_back(p.filename().string());
            continue;
        }
        auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) {
            const CnfMatrix& rep = c.front().f;
            return rep.variable_count() == f.variable_count() &&
                   rep.clause_count() == f.clause_count() && same_class(rep, f, sigma);
        });
        Member member{p.filename().string(), std::move(f)};
        if (it == classes.end()) classes.push_back({std::move(member)});
        else it->push_back(std::move(member));
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
        std::cout << "class " << k + 1 << ':';
        for (const auto& mbr : classes[k]) std::cout << ' ' << mbr.name;
        std::cout << '\n';
    }
    if (!outside.empty()) {
        std::cout << "unsatisfied:";
        for (const auto& name : outside) std::cout << ' ' << name;
        std::cout << '\n';
    }
    return ok;
}

int cmd_random(std::size_t n, std::size_t m, std::uint64_t seed, bool satisfiable,
               const std::string& out) {
    write_output(out, emit_dimacs(random_instance(n, m, seed, satisfiable)));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Special decompositions and coverings of CNF functions"};
    app.require_subcommand(1);

    std::string in, in2, out, sigma, delta;
    bool prune = false, all = false, autopick = false, extended = false, satisfiable = false;
    std::size_t n = 0, m = 0;
    std::uint64_t seed = 0;

    auto* decompose = app.add_subcommand("decompose", "CNF to special decomposition");
    decompose->add_option("cnf", in)->required();
    decompose->add_option("-o", out, "output file");

    auto* synthesize = app.add_subcommand("synthesize", "special decomposition to CNF");
    synthesize->add_option("sdec", in)->required();
    synthesize->add_option("-o", out, "output file");

    auto* cover = app.add_subcommand("cover", "search for a special covering");
    cover->add_option("sdec", in)->required();
    cover->add_flag("--prune", prune, "use forced-subset pruning");
    cover->add_flag("--all", all, "list every covering");

    auto* sat = app.add_subcommand("sat", "exhaustive satisfiability check");
    sat->add_option("cnf", in)->required();
    sat->add_flag("--all", all, "list every satisfying assignment");

    auto* transform = app.add_subcommand("transform", "trace of changes from f to h");
    transform->add_option("f.cnf", in)->required();
    transform->add_option("h.cnf", in2)->required();
    auto* sigma_opt = transform->add_option("--sigma", sigma, "tuple satisfying f (and h)");
    transform->add_flag("--auto", autopick, "pick a satisfying tuple automatically")
        ->excludes(sigma_opt);
    auto* ext_flag = transform->add_flag("--extended", extended, "allow pair flips");
    transform->add_option("--delta", delta, "tuple satisfying h")->needs(ext_flag);
    transform->add_option("-o", out, "output file");

    auto* apply = app.add_subcommand("apply", "replay a trace and print the result");
    apply->add_option("f.cnf", in)->required();
    apply->add_option("trace", in2)->required();
    apply->add_option("-o", out, "output file");

    auto* verify = app.add_subcommand("verify-trace", "check every step of a trace");
    verify->add_option("f.cnf", in)->required();
    verify->add_option("trace", in2)->required();

    auto* classes = app.add_subcommand("classes", "group CNF files into classes under a tuple");
    classes->add_option("dir", in)->required();
    classes->add_option("--sigma", sigma)->required();

    auto* random = app.add_subcommand("random", "random valid CNF");
    random->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    random->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    random->add_option("--seed", seed)->required();
    random->add_flag("--satisfiable", satisfiable, "redraw until satisfiable");
    random->add_option("-o", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    try {
        if (*decompose) return cmd_decompose(in, out);
        if (*synthesize) return cmd_synthesize(in, out);
        if (*cover) return cmd_cover(in, prune, all);
        if (*sat) return cmd_sat(in, all);
        if (*transform) return cmd_transform({in, in2, sigma, delta, out, autopick, extended});
        if (*apply) return cmd_apply(in, in2, out);
        if (*verify) return cmd_verify(in, in2);
        if (*classes) return cmd_classes(in, sigma);
        if (*random) return cmd_random(n, m, seed, satisfiable, out);
    } catch (const InadmissibleStep& e) {
        std::cerr << "speccover: " << e.what() << '\n';
        return inadmissible;
    } catch (const NotSatisfiedError& e) {
        std::cerr << "speccover: " << e.what() << '\n';
        return input_error;
    } catch (const UnreachableError& e) {
        std::cerr << "speccover: " << e.what() << '\n';
        return absent;
    } catch (const std::exception& e) {
        std::cerr << "speccover: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}
