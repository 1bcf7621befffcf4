// pavemat - command-line front end over the shared-library C API.
//
// Subcommands: construct, verify, enumerate, count, random, dual.
// Exit codes: 0 success, 1 domain violation, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pavemat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

int exit_code_for(pm_status status) {
    switch (status) {
        case PM_OK: return kExitOk;
        case PM_ERR_PARSE: return kExitUsage;
        default: return kExitDomain;
    }
}

int fail(pm_status status) {
    std::cerr << "error: " << pm_last_error() << "\n";
    return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

int write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitDomain;
    }
    out << text;
    return kExitOk;
}

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { pm_string_free(value); }
};

struct SeedGuard {
    pm_seed* value = nullptr;
    ~SeedGuard() { pm_seed_free(value); }
};

struct MatroidGuard {
    pm_matroid* value = nullptr;
    ~MatroidGuard() { pm_matroid_free(value); }
};

int cmd_construct(const std::string& seed_file, const std::string& out_file) {
    std::string text;
    if (!read_file(seed_file, text)) {
        std::cerr << "error: cannot read " << seed_file << "\n";
        return kExitUsage;
    }
    SeedGuard seed;
    if (pm_status s = pm_seed_parse(text.c_str(), &seed.value); s != PM_OK) return fail(s);
    MatroidGuard matroid;
    if (pm_status s = pm_construct_paving(seed.value, &matroid.value); s != PM_OK)
        return fail(s);
    StringGuard record;
    if (pm_status s = pm_matroid_format(matroid.value, 1, &record.value); s != PM_OK)
        return fail(s);
    int code = write_output(out_file, record.value);
    if (code == kExitOk)
        std::cerr << (pm_matroid_is_sparse_paving(matroid.value) ? "sparse-paving" : "paving")
                  << "\n";
    return code;
}

int cmd_verify(const std::string& file) {
    std::string text;
    if (!read_file(file, text)) {
        std::cerr << "error: cannot read " << file << "\n";
        return kExitUsage;
    }
    StringGuard report;
    int is_matroid = 0;
    if (pm_status s = pm_verify_text(text.c_str(), &report.value, &is_matroid); s != PM_OK)
        return fail(s);
    std::cout << report.value;
    return is_matroid ? kExitOk : kExitDomain;
}

int cmd_dual(const std::string& file) {
    std::string text;
    if (!read_file(file, text)) {
        std::cerr << "error: cannot read " << file << "\n";
        return kExitUsage;
    }
    MatroidGuard matroid;
    if (pm_status s = pm_matroid_parse(text.c_str(), &matroid.value); s != PM_OK)
        return fail(s);
    MatroidGuard dual;
    if (pm_status s = pm_matroid_dual(matroid.value, &dual.value); s != PM_OK) return fail(s);
    StringGuard record;
    if (pm_status s = pm_matroid_format(dual.value, 0, &record.value); s != PM_OK)
        return fail(s);
    std::cout << record.value;
    return kExitOk;
}

int cmd_enumerate(int n, int r, const std::string& cls, bool iso, const std::string& out_file) {
    pm_class klass = cls == "paving"          ? PM_CLASS_PAVING
                     : cls == "sparse_paving" ? PM_CLASS_SPARSE_PAVING
                                              : PM_CLASS_ALL;
    struct Sink {
        std::string corpus;
        bool first = true;
    } sink;
    auto visit = [](const pm_matroid* m, void* user) -> int {
        auto* s = static_cast<Sink*>(user);
        StringGuard record;
        if (pm_matroid_format(m, 0, &record.value) != PM_OK) return 1;
        if (!s->first) s->corpus += "\n";
        s->corpus += record.value;
        s->first = false;
        return 0;
    };
    if (pm_status s = pm_enumerate(n, r, klass, iso ? PM_MODE_ISO : PM_MODE_LABELED, visit,
                                   &sink);
        s != PM_OK)
        return fail(s);
    return write_output(out_file, sink.corpus);
}

int cmd_count(int n, int r, const std::string& cls, bool iso, bool check_bound,
              const std::string& convention) {
    if (check_bound) {
        pm_simplicity simplicity = convention == "none"       ? PM_SIMPLE_NONE
                                   : convention == "standard" ? PM_SIMPLE_STANDARD
                                                              : PM_SIMPLE_PAPER;
        StringGuard report;
        int holds = 0;
        if (pm_status s = pm_check_bound(n, r, simplicity, &report.value, &holds); s != PM_OK)
            return fail(s);
        std::cout << report.value;
        return kExitOk;
    }
    pm_class klass = cls == "paving"          ? PM_CLASS_PAVING
                     : cls == "sparse_paving" ? PM_CLASS_SPARSE_PAVING
                                              : PM_CLASS_ALL;
    StringGuard table;
    if (pm_status s =
            pm_count_table(n, r, klass, iso ? PM_MODE_ISO : PM_MODE_LABELED, &table.value);
        s != PM_OK)
        return fail(s);
    std::cout << table.value;
    return kExitOk;
}

int cmd_random(int n, int r, long long bound, unsigned long long rng_seed, bool no_complete) {
    SeedGuard seed;
    if (pm_status s = pm_greedy_seed(n, r, bound, rng_seed, no_complete ? 0 : 1, &seed.value);
        s != PM_OK)
        return fail(s);
    StringGuard seed_text;
    if (pm_status s = pm_seed_format(seed.value, &seed_text.value); s != PM_OK) return fail(s);
    MatroidGuard matroid;
    if (pm_status s = pm_construct_paving(seed.value, &matroid.value); s != PM_OK)
        return fail(s);
    StringGuard record;
    if (pm_status s = pm_matroid_format(matroid.value, 1, &record.value); s != PM_OK)
        return fail(s);
    std::cout << seed_text.value << "\n" << record.value;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"paving-matroid construction, verification and enumeration"};
    app.require_subcommand(1);

    std::string seed_file, file, out_file;
    int n = 0, r = 0;
    std::string cls = "paving";
    std::string convention = "paper";
    bool iso = false, check_bound = false, no_complete = false;
    long long bound = -1;
    unsigned long long rng_seed = 0;

    CLI::App* construct = app.add_subcommand("construct", "build a paving matroid from a seed file");
    construct->add_option("--seed-file", seed_file, "seed record file")->required();
    construct->add_option("--out", out_file, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "structure report for a matroid file");
    verify->add_option("--file", file, "matroid record file")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "stream a matroid corpus");
    enumerate->add_option("--n", n, "ground set size")->required();
    enumerate->add_option("--r", r, "rank")->required();
    enumerate->add_option("--class", cls, "paving | sparse_paving | all")
        ->check(CLI::IsMember({"paving", "sparse_paving", "all"}));
    enumerate->add_flag("--iso", iso, "one representative per isomorphism class");
    enumerate->add_option("--out", out_file, "output file (default stdout)");

    CLI::App* count = app.add_subcommand("count", "count matroids / check the counting bound");
    count->add_option("--n", n, "ground set size")->required();
    count->add_option("--r", r, "rank")->required();
    count->add_option("--class", cls, "paving | sparse_paving | all")
        ->check(CLI::IsMember({"paving", "sparse_paving", "all"}));
    count->add_flag("--iso", iso, "count isomorphism classes");
    count->add_flag("--check-bound", check_bound,
                    "check |M(n,r)| <= prod |Sp(n,t)| and print both sides");
    count->add_option("--convention", convention,
                      "simplicity convention for --check-bound: paper | standard | none")
        ->check(CLI::IsMember({"paper", "standard", "none"}));

    CLI::App* random = app.add_subcommand("random", "greedy random seed plus its matroid");
    random->add_option("--n", n, "ground set size")->required();
    random->add_option("--r", r, "rank")->required();
    random->add_option("--bound", bound, "iteration budget (default 50*C(n,r))")
        ->check(CLI::NonNegativeNumber);
    random->add_option("--rng-seed", rng_seed, "random generator seed");
    random->add_flag("--no-complete", no_complete, "skip the deterministic completion pass");

    CLI::App* dual = app.add_subcommand("dual", "dual of a matroid file");
    dual->add_option("--file", file, "matroid record file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (construct->parsed()) return cmd_construct(seed_file, out_file);
    if (verify->parsed()) return cmd_verify(file);
    if (enumerate->parsed()) return cmd_enumerate(n, r, cls, iso, out_file);
    if (count->parsed()) return cmd_count(n, r, cls, iso, check_bound, convention);
    if (random->parsed()) return cmd_random(n, r, bound, rng_seed, no_complete);
    if (dual->parsed()) return cmd_dual(file);
    return kExitUsage;
}
