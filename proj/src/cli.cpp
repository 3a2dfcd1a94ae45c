#include "wg/cli.hpp"

#include "wg/bounds.hpp"
#include "wg/cache.hpp"
#include "wg/exact.hpp"
#include "wg/graphs.hpp"
#include "wg/mc.hpp"
#include "wg/moments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace wg::cli {

namespace {

using nlohmann::json;

struct Globals {
    bool json = false;
    int threads = 0;
    std::string cache;
};

struct ElementArgs {
    std::string perm;
    std::string pairing;
};

void add_element_options(CLI::App* app, ElementArgs& e) {
    app->add_option("--perm", e.perm, "Permutation in one-line notation, e.g. 2,3,1");
    app->add_option("--pairing", e.pairing, "Pair partition as blocks, e.g. \"1,3|2,4\"");
}

GraphNode parse_element(bool want_permutation, const ElementArgs& e) {
    if (want_permutation) {
        if (!e.pairing.empty()) throw DomainError("--pairing: this family is labelled by permutations (use --perm)");
        try {
            return Permutation::parse(e.perm);
        } catch (const DomainError& ex) {
            throw DomainError(std::string("--perm: ") + ex.what());
        }
    }
    if (!e.perm.empty()) throw DomainError("--perm: this family is labelled by pair partitions (use --pairing)");
    try {
        return PairPartition::parse(e.pairing);
    } catch (const DomainError& ex) {
        throw DomainError(std::string("--pairing: ") + ex.what());
    }
}

Family family_arg(const std::string& text) {
    try {
        return parse_family(text);
    } catch (const DomainError& ex) {
        throw DomainError(std::string("--family: ") + ex.what());
    }
}

GraphKind graph_kind_for(Family f) {
    switch (f) {
    case Family::U: return GraphKind::Unitary;
    case Family::O:
    case Family::SP:
    case Family::COE: return GraphKind::Orthogonal;
    case Family::AIII: return GraphKind::AIII;
    }
    return GraphKind::Unitary;
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += to_string(v[i]);
    }
    return s;
}

json poly_json(const Polynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

// ---------------------------------------------------------------- value

struct ValueArgs {
    std::string family;
    ElementArgs element;
    std::string pairing2;
    long d = 0;
    bool has_d = false;
    long dminus = 0;
    bool symbolic = false;
    bool force = false;
    bool direct = false;
};

int cmd_value(const Globals& g, const ValueArgs& a, std::ostream& out, std::ostream& err) {
    const Family fam = family_arg(a.family);
    const GraphNode node = parse_element(labels_are_permutations(fam), a.element);
    if (a.symbolic) {
        const RationalFunctionRep rep = reconstruct_rational(fam, node, a.dminus);
        if (g.json) {
            json j{{"family", tag(fam)},
                   {"element", node.to_string()},
                   {"function", rep.to_string()},
                   {"numerator", poly_json(rep.numerator)},
                   {"denominator", poly_json(rep.denominator)},
                   {"validation_points", rep.validation_points}};
            if (fam == Family::AIII) j["dminus"] = a.dminus;
            out << j.dump() << '\n';
        } else {
            out << rep.to_string() << '\n';
        }
        return kOk;
    }
    if (!a.has_d) throw DomainError("--dim: required unless --symbolic is given");
    if (fam == Family::AIII && std::labs(a.dminus) > a.d) {
        err << "warning: |dminus| = " << std::labs(a.dminus) << " exceeds d = " << a.d
            << "; the value is formal (outside the ensemble range)\n";
    }
    const SolveOptions opts{a.force};
    ExactRational v;
    if (!a.pairing2.empty()) {
        if (fam != Family::O) throw DomainError("--pairing2: only the orthogonal family takes two pairings");
        PairPartition n;
        try {
            n = PairPartition::parse(a.pairing2);
        } catch (const DomainError& ex) {
            throw DomainError(std::string("--pairing2: ") + ex.what());
        }
        v = wg_orthogonal(node.pairing(), n, a.d, opts);
    } else if (a.direct) {
        if (fam != Family::COE) throw DomainError("--direct: only meaningful for the COE family");
        v = wg_coe_direct(node.pairing(), a.d);
    } else if (!g.cache.empty()) {
        const auto records = cache_load(g.cache);
        if (auto hit = cache_find(records, fam, node.class_key(), a.d, a.dminus)) {
            v = *hit;
        } else {
            const auto t = table(fam, node.level(), a.d, a.dminus, opts);
            v = t->at(node.class_key());
            cache_store(g.cache, records_of(*t));
        }
    } else {
        v = wg_value(fam, node, a.d, a.dminus, opts);
    }
    if (g.json) {
        json j{{"family", tag(fam)}, {"element", node.to_string()}, {"d", a.d}, {"value", to_string(v)}};
        if (fam == Family::AIII) j["dminus"] = a.dminus;
        out << j.dump() << '\n';
    } else {
        out << to_string(v) << '\n';
    }
    return kOk;
}

// --------------------------------------------------------------- series

struct SeriesArgs {
    std::string family;
    ElementArgs element;
    int order = 3;
    long dminus = 0;
    bool has_dminus = false;
};

int cmd_series(const Globals& g, const SeriesArgs& a, std::ostream& out) {
    const Family fam = family_arg(a.family);
    const GraphNode node = parse_element(labels_are_permutations(fam), a.element);
    const SeriesTruncation s = series(fam, node, a.order);
    const char* form = "";
    switch (fam) {
    case Family::U: form = "(-1)^|s| d^(|s|+k) Wg = sum_g c_g d^(-2g)"; break;
    case Family::O: form = "(-1)^|m| d^(|m|+k) Wg = sum_g c_g (-d)^(-g)"; break;
    case Family::SP: form = "(2d)^(|m|+k) |Wg| = sum_g c_g (2d)^(-g)"; break;
    case Family::AIII: form = "Wg = sum over paths (-1)^l0 dm^l1 d^-(l0+l1+l2)"; break;
    case Family::COE: break;
    }
    std::vector<ExactRational> numeric;
    if (a.has_dminus || fam != Family::AIII) {
        for (int n = -s.leading_exponent; n <= s.max_exponent; ++n) numeric.push_back(s.coefficient_of(n, a.dminus));
    }
    if (g.json) {
        json j{{"family", tag(fam)},
               {"element", node.to_string()},
               {"order", s.order},
               {"leading_exponent", s.leading_exponent},
               {"max_exponent", s.max_exponent}};
        if (fam == Family::AIII) {
            json terms = json::array();
            for (const auto& [key, count] : s.aiii_terms) {
                const int l2 = (node.level() - key.second) / 2;
                terms.push_back({{"solid", key.first}, {"dashed", key.second}, {"squiggled", l2},
                                 {"count", to_string(count)}});
            }
            j["terms"] = terms;
            if (a.has_dminus) j["dminus"] = a.dminus;
        } else {
            json c = json::array();
            for (const auto& x : s.coefficients) c.push_back(to_string(x));
            j["coefficients"] = c;
        }
        if (!numeric.empty()) {
            json c = json::array();
            for (const auto& x : numeric) c.push_back(to_string(x));
            j["coefficients_of_inverse_powers"] = c;
        }
        out << j.dump() << '\n';
        return kOk;
    }
    out << "form " << form << '\n';
    out << "leading_exponent " << s.leading_exponent << '\n';
    if (fam == Family::AIII) {
        out << "max_exponent " << s.max_exponent << '\n';
        for (const auto& [key, count] : s.aiii_terms) {
            const int l2 = (node.level() - key.second) / 2;
            out << "term solid=" << key.first << " dashed=" << key.second << " squiggled=" << l2
                << " exponent=" << key.first + key.second + l2 << " count=" << to_string(count) << '\n';
        }
        if (a.has_dminus) {
            out << "dminus " << a.dminus << '\n' << "inverse_powers";
            for (std::size_t i = 0; i < numeric.size(); ++i) out << (i ? "," : " ") << to_string(numeric[i]);
            out << '\n';
        }
    } else {
        out << "coefficients " << join(s.coefficients) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- paths

struct PathsArgs {
    std::string family;
    ElementArgs element;
    int solid = 0;
    bool list = false;
    std::size_t limit = 1000;
};

int cmd_paths(const Globals& g, const PathsArgs& a, std::ostream& out) {
    const Family fam = family_arg(a.family);
    if (fam == Family::COE || fam == Family::SP) throw DomainError("--family: paths use the u, o or aiii graph");
    const GraphKind kind = graph_kind_for(fam);
    const GraphNode node = parse_element(labels_are_permutations(fam), a.element);
    if (a.solid < 0) throw DomainError("--solid: must be nonnegative");
    const BigInt n = count_paths(kind, node, a.solid);
    PathEnumeration en;
    if (a.list) en = enumerate_paths(kind, node, a.solid, a.limit);
    if (g.json) {
        json j{{"graph", to_string(kind)}, {"element", node.to_string()}, {"solid", a.solid}, {"count", to_string(n)}};
        if (a.list) {
            json p = json::array();
            for (const auto& path : en.paths) p.push_back(format_path(kind, path));
            j["paths"] = p;
            j["truncated"] = en.truncated;
        }
        out << j.dump() << '\n';
        return kOk;
    }
    out << "count " << to_string(n) << '\n';
    for (const auto& path : en.paths) out << format_path(kind, path) << '\n';
    if (en.truncated) out << "truncated after " << en.paths.size() << " paths\n";
    return kOk;
}

// ------------------------------------------------------- factorizations

int cmd_factorizations(const Globals& g, const PathsArgs& a, std::ostream& out) {
    const Family fam = family_arg(a.family);
    if (fam != Family::U && fam != Family::O) throw DomainError("--family: factorizations exist for u and o");
    const GraphKind kind = graph_kind_for(fam);
    const GraphNode node = parse_element(labels_are_permutations(fam), a.element);
    if (a.solid < 0) throw DomainError("--length: must be nonnegative");
    const BigInt n = count_paths(kind, node, a.solid);
    const PathEnumeration en = enumerate_paths(kind, node, a.solid, a.limit);
    std::vector<std::string> lines;
    for (const auto& path : en.paths) lines.push_back(path_to_factorization(kind, path).to_string());
    if (g.json) {
        json j{{"graph", to_string(kind)}, {"element", node.to_string()}, {"length", a.solid},
               {"count", to_string(n)}, {"factorizations", lines}, {"truncated", en.truncated}};
        out << j.dump() << '\n';
        return kOk;
    }
    out << "count " << to_string(n) << '\n';
    for (const auto& l : lines) out << l << '\n';
    if (en.truncated) out << "truncated after " << lines.size() << " factorizations\n";
    return kOk;
}

// --------------------------------------------------------------- moment

struct MomentArgs {
    std::string family;
    long d = 0;
    long dminus = 0;
    std::string rows, cols, crows, ccols;
    bool force = false;
};

IndexSeq indices_arg(const char* name, const std::string& text) {
    try {
        return parse_indices(text);
    } catch (const DomainError& ex) {
        throw DomainError(std::string(name) + ": " + ex.what());
    }
}

int cmd_moment(const Globals& g, const MomentArgs& a, std::ostream& out, std::ostream& err) {
    MomentSpec s;
    s.family = family_arg(a.family);
    s.d = a.d;
    s.dminus = a.dminus;
    s.rows = indices_arg("--rows", a.rows);
    s.cols = indices_arg("--cols", a.cols);
    s.crows = indices_arg("--crows", a.crows);
    s.ccols = indices_arg("--ccols", a.ccols);
    switch (s.family) {
    case Family::U:
        break;
    case Family::O:
    case Family::AIII:
        if (!s.crows.empty() || !s.ccols.empty()) throw DomainError("--crows/--ccols: only unitary and COE moments take conjugated factors");
        break;
    case Family::COE:
        if (!s.cols.empty() || !s.ccols.empty()) throw DomainError("--cols/--ccols: COE moments use --rows (plain pairs) and --crows (conjugated pairs)");
        break;
    case Family::SP:
        throw DomainError("--family: symplectic moments are not available (Wg^Sp is only known up to sign)");
    }
    if (s.family == Family::AIII && std::labs(a.dminus) > a.d) {
        err << "warning: |dminus| exceeds d; the value is formal (outside the ensemble range)\n";
    }
    if (s.vanishes_by_symmetry()) {
        err << "note: unequal factor counts; the integral vanishes by invariance\n";
    }
    const ExactRational v = exact_moment(s, SolveOptions{a.force});
    if (g.json) {
        out << json{{"moment", s.to_string()}, {"value", to_string(v)}}.dump() << '\n';
    } else {
        out << to_string(v) << '\n';
    }
    return kOk;
}

// --------------------------------------------------------------- bounds

struct BoundsArgs {
    std::string family;
    int k = 0;
    int gmax = 3;
    long d = 0;
    bool has_d = false;
    bool dyck = false;
    bool neighborhood = false;
};

int print_report(const Globals& g, const BoundReport& r, std::ostream& out) {
    auto opt = [](const std::optional<ExactRational>& q) { return q ? to_string(*q) : std::string("-"); };
    if (g.json) {
        json rows = json::array();
        for (const auto& i : r.instances) {
            rows.push_back({{"class", i.class_key}, {"g", i.g}, {"d", i.d}, {"value", to_string(i.value)},
                            {"lower_ratio", opt(i.lower_ratio)}, {"upper_ratio_sq", opt(i.upper_ratio_sq)},
                            {"lower_ok", i.lower_ok}, {"upper_ok", i.upper_ok}});
        }
        out << json{{"family", r.family}, {"k", r.k}, {"statement", r.statement}, {"instances", rows},
                    {"passed", r.passed()}}
                   .dump()
            << '\n';
    } else {
        out << "statement " << r.statement << '\n';
        out << "class\tg\td\tvalue\tlower_ratio\tupper_ratio_sq\tverdict\n";
        for (const auto& i : r.instances) {
            out << i.class_key << '\t' << i.g << '\t' << i.d << '\t' << to_string(i.value) << '\t'
                << opt(i.lower_ratio) << '\t' << opt(i.upper_ratio_sq) << '\t'
                << (i.lower_ok && i.upper_ok ? "ok" : "FAIL") << '\n';
        }
        if (r.tightest_lower) out << "tightest_lower " << r.instances[*r.tightest_lower].class_key << '\n';
        if (r.tightest_upper) out << "tightest_upper " << r.instances[*r.tightest_upper].class_key << '\n';
        out << "verdict " << (r.passed() ? "pass" : "FAIL") << '\n';
    }
    return r.passed() ? kOk : kCheckFailed;
}

int cmd_bounds(const Globals& g, const BoundsArgs& a, std::ostream& out) {
    const Family fam = family_arg(a.family);
    if (a.k < 1) throw DomainError("--k: must be at least 1");
    if (a.dyck) {
        if (fam != Family::O) throw DomainError("--dyck: applies to the orthogonal family");
        json rows = json::array();
        if (!g.json) out << "coset_type\tdyck_area_sum\tdirect\tstatus\tdoubled_length_sum\n";
        for (const auto& mu : partitions_of(a.k)) {
            const DyckComparison c = compare_dyck_area(mu);
            const char* status = c.agrees() ? "agree" : "DISCREPANCY";
            if (g.json) {
                rows.push_back({{"coset_type", mu.key()}, {"dyck_area_sum", to_string(c.area_sum)},
                                {"direct", to_string(c.direct)}, {"status", status},
                                {"doubled_length_sum", to_string(c.doubled_length_sum)}});
            } else {
                out << mu.key() << '\t' << to_string(c.area_sum) << '\t' << to_string(c.direct) << '\t' << status
                    << '\t' << to_string(c.doubled_length_sum) << '\n';
            }
        }
        if (g.json) out << json{{"k", a.k}, {"dyck", rows}}.dump() << '\n';
        return kOk;
    }
    if (a.neighborhood) {
        if (fam != Family::U) throw DomainError("--neighborhood: applies to the unitary family");
        return print_report(g, certify_neighborhood(a.k), out);
    }
    switch (fam) {
    case Family::U:
        return print_report(g, a.has_d ? certify_wg_ratio_unitary(a.k, a.d) : certify_unitary_bounds(a.k, a.gmax), out);
    case Family::O:
        return print_report(g, a.has_d ? certify_orthogonal_ratio(a.k, a.d) : certify_orthogonal_bounds(a.k, a.gmax), out);
    case Family::SP:
        if (!a.has_d) throw DomainError("--d: the symplectic certification is a ratio bound and needs a dimension");
        return print_report(g, certify_sp_ratio(a.k, a.d), out);
    default:
        throw DomainError("--family: bounds are certified for u, o and sp");
    }
}

// ------------------------------------------------------------------- mc

struct McArgs {
    std::string family;
    long d = 0;
    bool has_d = false;
    std::vector<int> sig;
    std::uint64_t samples = 200000;
    std::uint64_t seed = 1;
    std::string moment;
    double threshold = 5.0;
};

int cmd_mc(const Globals& g, const McArgs& a, std::ostream& out) {
    const Family fam = family_arg(a.family);
    if (fam == Family::SP) {
        throw DomainError("--family: no Monte Carlo oracle for sp (Wg^Sp is only known up to sign, so there is no exact target)");
    }
    long d = a.d;
    long dminus = 0;
    if (!a.sig.empty()) {
        if (fam != Family::AIII) throw DomainError("--sig: only the aiii family has a signature");
        if (a.sig.size() != 2 || a.sig[0] < 0 || a.sig[1] < 0) throw DomainError("--sig: expected A,B with A, B >= 0");
        if (a.has_d && d != a.sig[0] + a.sig[1]) throw DomainError("--sig: A + B must equal --dim");
        d = a.sig[0] + a.sig[1];
        dminus = a.sig[0] - a.sig[1];
    } else if (fam == Family::AIII) {
        throw DomainError("--sig: required for the aiii family");
    } else if (!a.has_d) {
        throw DomainError("--dim: required");
    }
    MomentSpec s;
    try {
        s = MomentSpec::parse(fam, a.moment, d, dminus);
    } catch (const DomainError& ex) {
        throw DomainError(std::string("--moment: ") + ex.what());
    }
    const mc::ZReport z = mc::compare_with_exact(s, a.samples, a.seed, g.threads, a.threshold);
    const auto& e = z.estimate;
    if (g.json) {
        out << json{{"moment", s.to_string()}, {"exact", to_string(z.exact)}, {"mean_re", e.mean.real()},
                    {"mean_im", e.mean.imag()}, {"se_re", e.se_re}, {"se_im", e.se_im}, {"z_re", z.z_re},
                    {"z_im", z.z_im}, {"samples", e.samples}, {"seed", e.seed},
                    {"max_constraint_violation", e.max_constraint_violation}, {"passed", z.passed()}}
                   .dump()
            << '\n';
    } else {
        out << "moment " << s.to_string() << '\n'
            << "exact " << to_string(z.exact) << " (" << fmt_double(z.exact.get_d()) << ")\n"
            << "mean " << fmt_double(e.mean.real()) << ' ' << fmt_double(e.mean.imag()) << "i\n"
            << "se " << fmt_double(e.se_re) << ' ' << fmt_double(e.se_im) << '\n'
            << "z " << fmt_double(z.z_re) << ' ' << fmt_double(z.z_im) << '\n'
            << "samples " << e.samples << " seed " << e.seed << '\n'
            << "verdict " << (z.passed() ? "pass" : "FAIL") << '\n';
    }
    return z.passed() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- cache

struct CacheArgs {
    std::string family;
    int k = 0;
    long d = 0;
    long dminus = 0;
    bool force = false;
    double fraction = 0.05;
    std::uint64_t seed = 0;
};

int cmd_cache_export(const Globals& g, const CacheArgs& a, std::ostream& out) {
    if (g.cache.empty()) throw DomainError("--cache: no cache path (set --cache or WG_CACHE)");
    const Family fam = family_arg(a.family);
    const auto t = table(fam, a.k, a.d, a.dminus, SolveOptions{a.force});
    const std::size_t n = cache_store(g.cache, records_of(*t));
    if (g.json) {
        out << json{{"written", n}, {"path", g.cache}}.dump() << '\n';
    } else {
        out << "wrote " << n << " records to " << g.cache << '\n';
    }
    return kOk;
}

int cmd_cache_verify(const Globals& g, const CacheArgs& a, std::ostream& out, std::ostream& err) {
    if (g.cache.empty()) throw DomainError("--cache: no cache path (set --cache or WG_CACHE)");
    if (!(a.fraction > 0 && a.fraction <= 1)) throw DomainError("--fraction: must lie in (0, 1]");
    const CacheVerifyReport r = cache_verify(g.cache, a.fraction, a.seed);
    if (g.json) {
        json j{{"records", r.records}, {"checked", r.checked}, {"ok", r.ok()}};
        if (r.bad_line) j["bad_line"] = *r.bad_line;
        out << j.dump() << '\n';
    } else {
        out << "records " << r.records << " checked " << r.checked << ' ' << (r.ok() ? "ok" : "CORRUPT") << '\n';
    }
    if (!r.ok()) {
        err << "error: " << r.detail << '\n';
        return kCacheCorrupt;
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Weingarten calculus: values, series, path counts, moments, bounds, Monte Carlo", "wg"};
    app.set_config("--config", "", "INI/TOML file with default option values (flags win)");
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "One JSON record per result");
    app.add_option("--threads", g.threads, "Cap on worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
    app.add_option("--cache", g.cache, "Value cache file (TSV)")->envname("WG_CACHE");

    ValueArgs va;
    auto* value = app.add_subcommand("value", "Exact Weingarten value");
    value->add_option("--family", va.family, "u|o|coe|sp|aiii")->required();
    add_element_options(value, va.element);
    value->add_option("--pairing2", va.pairing2, "Second pairing n for Wg^O(m, n, d)");
    auto* vdim = value->add_option("--dim", va.d, "Dimension d");
    value->add_option("--dminus", va.dminus, "A III parameter d- = a - b");
    value->add_flag("--symbolic", va.symbolic, "Rational function of d");
    value->add_flag("--force", va.force, "Allow d below the guaranteed range");
    value->add_flag("--direct", va.direct, "COE: solve the (d+1) recurrence on all pairings");

    SeriesArgs sa;
    auto* ser = app.add_subcommand("series", "Truncated 1/d expansion from path counts");
    ser->add_option("--family", sa.family, "u|o|sp|aiii")->required();
    add_element_options(ser, sa.element);
    ser->add_option("--order", sa.order, "Truncation order G")->check(CLI::NonNegativeNumber);
    auto* sdm = ser->add_option("--dminus", sa.dminus, "A III: also print coefficients at this d-");

    PathsArgs pa;
    auto* paths = app.add_subcommand("paths", "Weingarten-graph path counts");
    paths->add_option("--family", pa.family, "u|o|aiii")->required();
    add_element_options(paths, pa.element);
    paths->add_option("--solid", pa.solid, "Number of solid edges l")->required();
    paths->add_flag("--list", pa.list, "List the paths");
    paths->add_option("--limit", pa.limit, "Maximum number of listed paths");

    PathsArgs fa;
    auto* facts = app.add_subcommand("factorizations", "Monotone factorizations");
    facts->add_option("--family", fa.family, "u|o")->required();
    add_element_options(facts, fa.element);
    facts->add_option("--length", fa.solid, "Number of transpositions")->required();
    facts->add_option("--limit", fa.limit, "Maximum number listed");

    MomentArgs ma;
    auto* mom = app.add_subcommand("moment", "Exact Haar moment");
    mom->add_option("--family", ma.family, "u|o|coe|aiii")->required();
    mom->add_option("--dim", ma.d, "Dimension d")->required();
    mom->add_option("--dminus", ma.dminus, "A III parameter d-");
    mom->add_option("--rows", ma.rows, "Row indices (COE: plain pairs)");
    mom->add_option("--cols", ma.cols, "Column indices");
    mom->add_option("--crows", ma.crows, "Conjugated row indices (COE: conjugated pairs)");
    mom->add_option("--ccols", ma.ccols, "Conjugated column indices");
    mom->add_flag("--force", ma.force, "Allow d below the guaranteed range");

    BoundsArgs ba;
    auto* bnd = app.add_subcommand("bounds", "Certify the uniform bounds exactly");
    bnd->add_option("--family", ba.family, "u|o|sp")->required();
    bnd->add_option("--k", ba.k, "Level k")->required();
    bnd->add_option("--gmax", ba.gmax, "Largest g")->check(CLI::NonNegativeNumber);
    auto* bd = bnd->add_option("--d", ba.d, "Dimension for the Wg-ratio bounds");
    bnd->add_flag("--dyck", ba.dyck, "Dyck-area report (orthogonal)");
    bnd->add_flag("--neighborhood", ba.neighborhood, "Transposition-neighborhood bound (unitary)");

    McArgs mca;
    auto* mcc = app.add_subcommand("mc", "Monte Carlo estimate against the exact moment");
    mcc->add_option("--family", mca.family, "u|o|coe|aiii")->required();
    auto* mdim = mcc->add_option("--dim", mca.d, "Dimension d");
    mcc->add_option("--sig", mca.sig, "A III signature A,B")->delimiter(',');
    mcc->add_option("--samples", mca.samples, "Number of samples");
    mcc->add_option("--seed", mca.seed, "Seed");
    mcc->add_option("--moment", mca.moment, "Index lists 'rows;cols[;crows;ccols]' (COE: 'rows;crows')")->required();
    mcc->add_option("--threshold", mca.threshold, "Pass threshold in standard errors");

    CacheArgs ca;
    auto* cache = app.add_subcommand("cache", "Result cache maintenance");
    cache->require_subcommand(1);
    auto* cexp = cache->add_subcommand("export", "Solve a table and append it to the cache");
    cexp->add_option("--family", ca.family, "u|o|coe|sp|aiii")->required();
    cexp->add_option("--k", ca.k, "Level k")->required();
    cexp->add_option("--dim", ca.d, "Dimension d")->required();
    cexp->add_option("--dminus", ca.dminus, "A III parameter d-");
    cexp->add_flag("--force", ca.force, "Allow d below the guaranteed range");
    auto* cver = cache->add_subcommand("verify", "Parse every record and recompute a random fraction");
    cver->add_option("--fraction", ca.fraction, "Fraction of records recomputed");
    cver->add_option("--seed", ca.seed, "Sampling seed");

    std::vector<std::string> store{"wg"};
    store.insert(store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kDomainError;
    }

    try {
        if (value->parsed()) {
            va.has_d = vdim->count() > 0;
            return cmd_value(g, va, out, err);
        }
        if (ser->parsed()) {
            sa.has_dminus = sdm->count() > 0;
            return cmd_series(g, sa, out);
        }
        if (paths->parsed()) return cmd_paths(g, pa, out);
        if (facts->parsed()) return cmd_factorizations(g, fa, out);
        if (mom->parsed()) return cmd_moment(g, ma, out, err);
        if (bnd->parsed()) {
            ba.has_d = bd->count() > 0;
            return cmd_bounds(g, ba, out);
        }
        if (mcc->parsed()) {
            mca.has_d = mdim->count() > 0;
            return cmd_mc(g, mca, out);
        }
        if (cexp->parsed()) return cmd_cache_export(g, ca, out);
        if (cver->parsed()) return cmd_cache_verify(g, ca, out, err);
    } catch (const CacheCorruption& e) {
        err << "error: " << e.what() << '\n';
        return kCacheCorrupt;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kDomainError;
}

} // namespace wg::cli
