#include "textio.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <vector>

namespace pavemat {

namespace {

std::string_view trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

// a record ends at its first blank line; anything after is an error
void require_no_trailing(const std::vector<std::string_view>& lines, std::size_t from) {
    for (std::size_t i = from; i < lines.size(); ++i)
        if (!trim(lines[i]).empty())
            throw ParseError("trailing content after record: '" +
                             std::string(trim(lines[i])) + "'");
}

int parse_int_field(std::string_view token, std::string_view key) {
    if (token.substr(0, key.size()) != key)
        throw ParseError("expected '" + std::string(key) + "<value>', got '" +
                         std::string(token) + "'");
    token.remove_prefix(key.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("bad integer in '" + std::string(key) + "' field");
    return value;
}

// header: "<kind> n=<n> r=<r>"
std::pair<int, int> parse_header(std::string_view line, std::string_view kind) {
    std::istringstream in{std::string(line)};
    std::string word, nfield, rfield;
    if (!(in >> word >> nfield >> rfield) || word != kind)
        throw ParseError("expected header '" + std::string(kind) + " n=<n> r=<r>', got '" +
                         std::string(line) + "'");
    std::string extra;
    if (in >> extra) throw ParseError("trailing token '" + extra + "' in header");
    return {parse_int_field(nfield, "n="), parse_int_field(rfield, "r=")};
}

void append_family(std::string& out, const SetFamily& family) {
    for (const ElementSet& s : family) {
        out += to_literal(s);
        out += '\n';
    }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_matroid(const Matroid& m, bool with_derived) {
    std::string out = "matroid n=" + std::to_string(m.size()) +
                      " r=" + std::to_string(m.rank()) + "\nbases:\n";
    append_family(out, m.bases());
    if (with_derived) {
        if (m.rank() >= 1) {
            out += "hyperplanes:\n";
            append_family(out, m.hyperplanes());
        }
        out += "circuits:\n";
        append_family(out, m.circuits());
    }
    return out;
}

MatroidRecord parse_matroid_record(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i == lines.size()) throw ParseError("empty matroid record");
    auto [n, r] = parse_header(trim(lines[i]), "matroid");
    if (n < 1 || n > 64) throw ParseError("ground set size outside 1..64");
    GroundSet g(n);
    ++i;
    if (i >= lines.size() || trim(lines[i]) != "bases:")
        throw ParseError("expected 'bases:' section");
    ++i;
    SetFamily bases(g);
    bool in_bases = true;
    for (; i < lines.size(); ++i) {
        std::string_view line = trim(lines[i]);
        if (line.empty()) break;  // records end at a blank line
        if (line == "hyperplanes:" || line == "circuits:") {
            in_bases = false;  // derived sections are output-only; content is discarded
            continue;
        }
        try {
            ElementSet parsed = parse_literal(g, line);
            if (in_bases && !bases.insert(parsed))
                throw ParseError("duplicate basis {" + std::string(line) + "}");
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(e.what()) + " in line '" + std::string(line) + "'");
        }
    }
    require_no_trailing(lines, i);
    return MatroidRecord{g, r, std::move(bases)};
}

Matroid matroid_from_record(const MatroidRecord& record) {
    for (const ElementSet& b : record.bases) {
        if (b.card() != record.r)
            throw NotAMatroid("rank mismatch: declared r=" + std::to_string(record.r) +
                                  " but basis {" + to_literal(b) + "} has size " +
                                  std::to_string(b.card()),
                              std::nullopt);
    }
    return Matroid::from_bases(record.ground, record.bases);
}

std::string format_seed(const PavingSeed& seed) {
    std::string out = "seed n=" + std::to_string(seed.ground.size()) +
                      " r=" + std::to_string(seed.r) + "\nH':\n";
    append_family(out, seed.large_hyperplanes);
    return out;
}

PavingSeed parse_seed(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i == lines.size()) throw ParseError("empty seed record");
    auto [n, r] = parse_header(trim(lines[i]), "seed");
    if (n < 1 || n > 64) throw ParseError("ground set size outside 1..64");
    GroundSet g(n);
    ++i;
    if (i >= lines.size() || trim(lines[i]) != "H':")
        throw ParseError("expected \"H':\" section");
    ++i;
    SetFamily family(g);
    for (; i < lines.size(); ++i) {
        std::string_view line = trim(lines[i]);
        if (line.empty()) break;
        try {
            if (!family.insert(parse_literal(g, line)))
                throw ParseError("duplicate seed set {" + std::string(line) + "}");
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(e.what()) + " in line '" + std::string(line) + "'");
        }
    }
    require_no_trailing(lines, i);
    return PavingSeed{g, r, std::move(family)};
}

VerifyResult verify_record(const MatroidRecord& record) {
    VerifyResult result;
    std::string& out = result.report;
    out = "matroid n=" + std::to_string(record.ground.size()) +
          " r=" + std::to_string(record.r) + "\n";

    if (record.bases.empty()) {
        out += "is_matroid: no\nno bases\n";
        return result;
    }
    for (const ElementSet& b : record.bases) {
        if (b.card() != record.r) {
            out += "is_matroid: no\nrank mismatch: declared r=" + std::to_string(record.r) +
                   " but basis {" + to_literal(b) + "} has size " + std::to_string(b.card()) +
                   "\n";
            return result;
        }
    }
    if (auto w = exchange_violation(record.bases)) {
        out += "is_matroid: no\nnot a matroid: B1={" + to_literal(w->b1) + "}, B2={" +
               to_literal(w->b2) + "}, x=" + std::to_string(w->x) + " admits no exchange\n";
        return result;
    }

    result.is_matroid = true;
    Matroid m = Matroid::from_bases_unchecked(record.ground, record.bases);
    StructureReport rep = analyze(m);

    out += "is_matroid: yes\n";
    out += "rank: " + std::to_string(rep.rank) + "\n";
    out += std::string("simple(paper): ") + yesno(rep.simple_paper) + "\n";
    out += std::string("simple(standard): ") + yesno(rep.simple_standard) + "\n";
    out += std::string("paving(circuits): ") + yesno(rep.paving) + "\n";
    out += std::string("paving(hyperplanes): ") +
           (rep.paving_by_hyperplanes ? yesno(*rep.paving_by_hyperplanes) : "n/a") + "\n";
    out += std::string("sparse(dual-paving): ") + yesno(rep.sparse_paving) + "\n";
    out += std::string("sparse(n2-empty): ") +
           (rep.sparse_by_n2_empty ? yesno(*rep.sparse_by_n2_empty) : "n/a") + "\n";
    out += std::string("sparse(hyperplane-sizes): ") +
           (rep.sparse_by_hyperplane_sizes ? yesno(*rep.sparse_by_hyperplane_sizes) : "n/a") +
           "\n";
    out += std::string("uniform: ") + yesno(rep.uniform) + "\n";
    if (rep.hyperplanes) {
        out += "hyperplanes:\n";
        append_family(out, *rep.hyperplanes);
    } else {
        out += "hyperplanes: n/a\n";
    }
    if (rep.npartition) {
        out += "n1: " + std::to_string(rep.npartition->n1.size()) + "\n";
        out += "n2: " + std::to_string(rep.npartition->n2.size()) + "\n";
        if (!rep.npartition->n2.empty()) {
            out += "n2-sets:\n";
            append_family(out, rep.npartition->n2);
        }
    } else {
        out += "n1: n/a\nn2: n/a\n";
    }
    return result;
}

std::string class_name(MatroidClass cls) {
    switch (cls) {
        case MatroidClass::paving: return "paving";
        case MatroidClass::sparse_paving: return "sparse_paving";
        case MatroidClass::all_matroids: return "all";
    }
    return "?";
}

std::string mode_name(CountMode mode) {
    return mode == CountMode::labeled ? "labeled" : "iso";
}

std::string format_count_table(const std::vector<CountRecord>& records) {
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"n", "r", "class", "mode", "count"});
    for (const CountRecord& rec : records)
        rows.push_back({std::to_string(rec.query.n), std::to_string(rec.query.r),
                        class_name(rec.query.cls), mode_name(rec.query.mode),
                        std::to_string(rec.count)});
    std::array<std::size_t, 5> width{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 5; ++c) {
            out += row[c];
            if (c + 1 < 5) out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

std::string format_bound_check(const BoundCheck& check) {
    std::string conv;
    switch (check.convention) {
        case SimplicityFilter::none: conv = "none"; break;
        case SimplicityFilter::paper: conv = "paper"; break;
        case SimplicityFilter::standard: conv = "standard"; break;
    }
    std::string out = "bound check n=" + std::to_string(check.n) +
                      " r=" + std::to_string(check.r) + " simplicity=" + conv + "\n";
    out += "|M(" + std::to_string(check.n) + "," + std::to_string(check.r) +
           ")| = " + std::to_string(check.matroid_count) + "\n";
    std::string factors;
    for (std::size_t i = 0; i < check.sparse_counts.size(); ++i) {
        if (i) factors += " * ";
        factors += std::to_string(check.sparse_counts[i]);
    }
    if (check.sparse_counts.empty()) factors = "1 (empty product)";
    out += "prod |Sp(" + std::to_string(check.n) + ",t)|, t=" + std::to_string(check.r) +
           ".." + std::to_string(check.n - 1) + " = " + factors + " = " +
           std::to_string(check.product) + "\n";
    out += std::string(check.holds ? "PASS" : "FAIL") + ": " +
           std::to_string(check.matroid_count) + (check.holds ? " <= " : " > ") +
           std::to_string(check.product) + "\n";
    return out;
}

}  // namespace pavemat
