#include "dlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "dlab/identities.hpp"
#include "dlab/reduction.hpp"
#include "dlab/report_io.hpp"
#include "dlab/sequences.hpp"
#include "dlab/sweep.hpp"
#include "dlab/theorems.hpp"

namespace dlab::cli {
namespace {

using identities::CheckResult;
using report_io::Format;
using report_io::Record;
using sequences::Family;
using theorems::DivisibilityReport;
using theorems::SumSpec;

struct Range {
    long long lo = 0;
    long long hi = 0;
};

long long parse_ll(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::domain_error("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw std::domain_error("not an integer: '" + s + "'");
    return v;
}

// "lo..hi" inclusive, or a single value v meaning v..v.
Range parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const long long v = parse_ll(s);
        return {v, v};
    }
    const Range r{parse_ll(s.substr(0, dots)), parse_ll(s.substr(dots + 2))};
    if (r.lo > r.hi) throw std::domain_error("empty range: '" + s + "'");
    return r;
}

Range range_or(const std::string& s, Range fallback) {
    return s.empty() ? fallback : parse_range(s);
}

std::vector<int> eps_values(const std::string& eps) {
    if (eps == "both") return {1, -1};
    if (eps == "plus") return {1};
    if (eps == "minus") return {-1};
    throw std::domain_error("bad eps: '" + eps + "'");
}

std::vector<long long> parse_indices(const std::string& s) {
    std::vector<long long> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(parse_ll(s.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// Smallest value >= lo with the given parity (0 even, 1 odd).
long long align_parity(long long lo, int parity) {
    return ((lo % 2 + 2) % 2) == parity ? lo : lo + 1;
}

struct Common {
    std::string format = "pretty";
    long long jobs = 0;  // 0 = default_jobs()
    bool ci = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "pretty, jsonl or csv")
        ->check(CLI::IsMember({"pretty", "jsonl", "csv"}))
        ->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads (default: DELANNOY_LAB_JOBS or hardware)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--ci", c.ci, "stop issuing work at the first failed check");
}

long long pick_jobs(const Common& c) { return c.jobs > 0 ? c.jobs : sweep::default_jobs(); }

// Runs the thunks in parallel, emits one record per result in index order and
// maps "any witness" to exit status 1.
template <class R>
int sweep_and_emit(const std::vector<std::function<R()>>& work, const Common& c,
                   std::ostream& out) {
    const Format format = report_io::parse_format(c.format);
    const auto results = sweep::run<R>(
        work.size(), pick_jobs(c), c.ci, [&](std::size_t i) { return work[i](); },
        [](const R& r) { return !r.pass; });
    std::vector<Record> recs;
    recs.reserve(results.size());
    bool any_fail = false;
    for (const R& r : results) {
        any_fail = any_fail || !r.pass;
        recs.push_back(report_io::from(r));
    }
    report_io::emit(out, recs, format);
    return any_fail ? 1 : 0;
}

struct PolyArgs {
    std::string family;
    std::string n;
    std::string h = "1";
    std::string m = "1";
};

int run_poly(const PolyArgs& g, const Common& c, std::ostream& out) {
    const Format format = report_io::parse_format(c.format);
    const Family fam = sequences::family_from_letter(g.family[0]);
    const Range n = parse_range(g.n);
    const Range h = parse_range(g.h);
    const Range m = parse_range(g.m);
    const bool single = n.lo == n.hi && h.lo == h.hi && m.lo == m.hi;
    if (format == Format::Csv) out << "family,n,h,m,degree,coeffs\n";
    for (long long nv = n.lo; nv <= n.hi; ++nv)
        for (long long hv = h.lo; hv <= h.hi; ++hv)
            for (long long mv = m.lo; mv <= m.hi; ++mv) {
                const auto& p = sequences::family_poly_power(fam, nv, hv, mv);
                switch (format) {
                    case Format::Pretty:
                        if (single)
                            out << p.str() << '\n';
                        else
                            out << g.family << " n=" << nv << " h=" << hv << " m=" << mv << ": "
                                << p.str() << '\n';
                        break;
                    case Format::Jsonl: {
                        nlohmann::json j;
                        j["family"] = g.family;
                        j["n"] = nv;
                        j["h"] = hv;
                        j["m"] = mv;
                        j["degree"] = p.degree();
                        auto coeffs = nlohmann::json::array();
                        for (const Integer& v : p.coeffs()) coeffs.push_back(v.str());
                        j["coeffs"] = std::move(coeffs);
                        j["text"] = p.str();
                        out << j.dump() << '\n';
                        break;
                    }
                    case Format::Csv: {
                        out << g.family << ',' << nv << ',' << hv << ',' << mv << ','
                            << p.degree() << ',';
                        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
                            out << (i ? ";" : "") << p.coeffs()[i].str();
                        out << '\n';
                        break;
                    }
                }
            }
    return 0;
}

struct CoeffArgs {
    std::string table;
    std::string l, a, i, j, h;
    std::string indices = "1,2";
};

struct DumpRow {
    std::vector<std::pair<std::string, long long>> nums;
    std::string indices;  // set only for the tuple tables
    std::vector<Integer> values;
};

std::vector<DumpRow> coeff_rows(const CoeffArgs& g) {
    std::vector<DumpRow> rows;
    if (g.table == "newton" || g.table == "weight") {
        const Range l = range_or(g.l, {1, 4});
        const Range a = range_or(g.a, {0, 3});
        for (long long lv = l.lo; lv <= l.hi; ++lv)
            for (long long av = a.lo; av <= a.hi; ++av) {
                DumpRow row{{{"l", lv}, {"a", av}}, "", {}};
                if (g.table == "newton") {
                    row.values = reduction::newton_coeffs(lv, av);
                } else {
                    for (long long u = 0; u <= av; ++u)
                        row.values.push_back(reduction::weight_coeff(u, lv, av));
                }
                rows.push_back(std::move(row));
            }
    } else if (g.table == "power" || g.table == "scaled-power") {
        const Range i = range_or(g.i, {0, 4});
        const Range h = range_or(g.h, {1, 3});
        for (long long iv = i.lo; iv <= i.hi; ++iv)
            for (long long hv = h.lo; hv <= h.hi; ++hv) {
                DumpRow row{{{"i", iv}, {"h", hv}}, "", {}};
                if (g.table == "power") {
                    row.values = reduction::power_row(iv, hv);
                } else {
                    for (long long t = iv; t <= hv * iv; ++t)
                        row.values.push_back(reduction::scaled_power_coeff(iv, t, hv));
                    if (row.values.empty()) row.values.push_back(1);  // i = 0 row
                }
                rows.push_back(std::move(row));
            }
    } else if (g.table == "pair" || g.table == "scaled-pair") {
        const Range i = range_or(g.i, {0, 4});
        const Range j = range_or(g.j, {0, 4});
        for (long long iv = i.lo; iv <= i.hi; ++iv)
            for (long long jv = j.lo; jv <= j.hi; ++jv) {
                DumpRow row{{{"i", iv}, {"j", jv}}, "", {}};
                for (long long lv = 0; lv <= iv + jv; ++lv)
                    row.values.push_back(g.table == "pair"
                                             ? reduction::pair_coeff(iv, jv, lv)
                                             : reduction::scaled_pair_coeff(iv, jv, lv));
                rows.push_back(std::move(row));
            }
    } else if (g.table == "product" || g.table == "scaled-product") {
        const auto idx = parse_indices(g.indices);
        DumpRow row{{}, g.indices, {}};
        row.values = g.table == "product" ? reduction::product_row(idx)
                                          : reduction::scaled_product_row(idx);
        rows.push_back(std::move(row));
    } else if (g.table == "power-product" || g.table == "scaled-power-product") {
        const auto idx = parse_indices(g.indices);
        const Range h = range_or(g.h, {1, 3});
        for (long long hv = h.lo; hv <= h.hi; ++hv) {
            DumpRow row{{{"h", hv}}, g.indices, {}};
            row.values = g.table == "power-product"
                             ? reduction::power_product_row(idx, hv)
                             : reduction::scaled_power_product_row(idx, hv);
            rows.push_back(std::move(row));
        }
    } else {
        throw std::domain_error("unknown table: '" + g.table + "'");
    }
    return rows;
}

int run_coeff(const CoeffArgs& g, const Common& c, std::ostream& out) {
    const Format format = report_io::parse_format(c.format);
    const auto rows = coeff_rows(g);
    if (format == Format::Csv) out << "table,params,values\n";
    for (const DumpRow& row : rows) {
        switch (format) {
            case Format::Pretty: {
                out << g.table;
                if (!row.indices.empty()) out << " indices=" << row.indices;
                for (const auto& [k, v] : row.nums) out << ' ' << k << '=' << v;
                out << ':';
                for (const Integer& v : row.values) out << ' ' << v.str();
                out << '\n';
                break;
            }
            case Format::Jsonl: {
                nlohmann::json j;
                j["table"] = g.table;
                if (!row.indices.empty()) j["indices"] = row.indices;
                for (const auto& [k, v] : row.nums) j[k] = v;
                auto values = nlohmann::json::array();
                for (const Integer& v : row.values) values.push_back(v.str());
                j["values"] = std::move(values);
                out << j.dump() << '\n';
                break;
            }
            case Format::Csv: {
                out << g.table << ',';
                bool first = true;
                if (!row.indices.empty()) {
                    out << "indices=" << row.indices;
                    first = false;
                }
                for (const auto& [k, v] : row.nums) {
                    out << (first ? "" : ";") << k << '=' << v;
                    first = false;
                }
                out << ',';
                for (std::size_t i = 0; i < row.values.size(); ++i)
                    out << (i ? ";" : "") << row.values[i].str();
                out << '\n';
                break;
            }
        }
    }
    return 0;
}

struct LemmaArgs {
    std::string id;
    std::string l, u, n, b, J, M, I, a, h, x, y, e;
    std::string kind = "all";
    std::string eps = "both";
    long long kmax = 40;
    long long nmax = 40;
};

std::vector<std::function<CheckResult()>> lemma_work(const LemmaArgs& g) {
    using identities::QuotientKind;
    std::vector<std::function<CheckResult()>> work;

    if (g.id == "telescope" || g.id == "telescope-sum") {
        const bool sums = g.id == "telescope-sum";
        const Range l = range_or(g.l, {0, 8});
        const Range u = range_or(g.u, {0, 8});
        const long long cap = sums ? g.nmax : g.kmax;
        for (const int sign : eps_values(g.eps))
            for (long long lv = l.lo; lv <= l.hi; ++lv)
                for (long long uv = u.lo; uv <= u.hi; ++uv)
                    work.emplace_back([=] {
                        return sums ? identities::check_telescope_sum(sign, lv, uv, cap)
                                    : identities::check_telescope(sign, lv, uv, cap);
                    });
    } else if (g.id == "half-product") {
        const Range n = range_or(g.n, {1, 40});
        const Range l = range_or(g.l, {1, 40});
        for (long long nv = n.lo; nv <= n.hi; ++nv)
            for (long long lv = l.lo; lv <= l.hi; ++lv)
                work.emplace_back(
                    [=] { return identities::check_half_product_integrality(nv, lv); });
    } else if (g.id == "convolution") {
        const Range x = range_or(g.x, {0, 10});
        const Range y = range_or(g.y, {0, 10});
        const Range a = range_or(g.a, {0, 5});
        const Range b = range_or(g.b, {0, 5});
        for (long long xv = x.lo; xv <= x.hi; ++xv)
            for (long long yv = y.lo; yv <= y.hi; ++yv)
                for (long long av = a.lo; av <= a.hi; ++av)
                    for (long long bv = b.lo; bv <= b.hi; ++bv)
                        work.emplace_back([=] {
                            return identities::check_binomial_convolution(xv, yv, av, bv);
                        });
    } else if (g.id == "newton-head-parity") {
        const Range l = range_or(g.l, {1, 12});
        const Range a = range_or(g.a, {1, 4});
        for (long long lv = l.lo; lv <= l.hi; ++lv)
            for (long long av = a.lo; av <= a.hi; ++av)
                work.emplace_back([=] { return identities::check_newton_head_parity(lv, av); });
    } else if (g.id == "w-parity" || g.id == "w-pair") {
        const bool pair = g.id == "w-pair";
        const Range n = range_or(g.n, {1, 40});
        const Range b = range_or(g.b, pair ? Range{1, 20} : Range{0, 20});
        for (long long nv = n.lo; nv <= n.hi; ++nv)
            for (long long bv = b.lo; bv <= b.hi; ++bv)
                work.emplace_back([=] {
                    return pair ? identities::check_w_pair_value(nv, bv)
                                : identities::check_w_sum_parity(nv, bv);
                });
    } else if (g.id == "diagonal-parity") {
        const Range J = range_or(g.J, {1, 64});
        for (long long Jv = J.lo; Jv <= J.hi; ++Jv)
            work.emplace_back([=] { return identities::check_diagonal_parity(Jv); });
    } else if (g.id == "pair-parity") {
        const Range M = range_or(g.M, {1, 2});
        const Range n = range_or(g.n, {1, 6});
        for (long long Mv = M.lo; Mv <= M.hi; ++Mv)
            for (long long nv = n.lo; nv <= n.hi; ++nv) {
                const Range I = range_or(g.I, {0, 2 * Mv * nv});
                const Range l = range_or(g.l, {1, 2 * Mv * nv});
                for (long long Iv = I.lo; Iv <= I.hi; ++Iv)
                    for (long long lv = l.lo; lv <= l.hi; ++lv)
                        work.emplace_back(
                            [=] { return identities::check_pair_sum_parity(Mv, nv, Iv, lv); });
            }
    } else if (g.id == "tilde-parity-odd") {
        const Range M = range_or(g.M, {1, 2});
        const Range n = range_or(g.n, {1, 4});
        const Range h = range_or(g.h, {1, 2});
        for (long long Mv = M.lo; Mv <= M.hi; ++Mv)
            for (long long nv = n.lo; nv <= n.hi; ++nv)
                for (long long hv = h.lo; hv <= h.hi; ++hv) {
                    const Range I = range_or(g.I, {1, 2 * Mv * nv});
                    for (long long Iv = align_parity(I.lo, 1); Iv <= I.hi; Iv += 2) {
                        const Range l = range_or(g.l, {0, hv * Iv});
                        for (long long lv = l.lo; lv <= l.hi; ++lv)
                            work.emplace_back([=] {
                                return identities::check_tilde_sum_parity_odd(Mv, nv, Iv, lv, hv);
                            });
                    }
                }
    } else if (g.id == "tilde-parity-even") {
        const Range M = range_or(g.M, {1, 2});
        const Range n = range_or(g.n, {1, 4});
        const Range h = range_or(g.h, {1, 2});
        for (long long Mv = M.lo; Mv <= M.hi; ++Mv)
            for (long long nv = n.lo; nv <= n.hi; ++nv)
                for (long long hv = h.lo; hv <= h.hi; ++hv) {
                    const Range I = range_or(g.I, {0, 2 * Mv * nv});
                    const Range e = range_or(g.e, {0, 2 * hv * Mv * nv});
                    for (long long Iv = align_parity(I.lo, 0); Iv <= I.hi; Iv += 2)
                        for (long long ev = align_parity(e.lo, 0); ev <= e.hi; ev += 2)
                            work.emplace_back([=] {
                                return identities::check_tilde_sum_parity_even(Mv, nv, Iv, ev, hv);
                            });
                }
    } else if (g.id == "quotients") {
        std::vector<QuotientKind> kinds;
        if (g.kind == "all")
            kinds = {QuotientKind::DelannoyAlt, QuotientKind::SchroderPos,
                     QuotientKind::SchroderAlt};
        else if (g.kind == "delannoy-alt")
            kinds = {QuotientKind::DelannoyAlt};
        else if (g.kind == "schroder-pos")
            kinds = {QuotientKind::SchroderPos};
        else if (g.kind == "schroder-alt")
            kinds = {QuotientKind::SchroderAlt};
        else
            throw std::domain_error("unknown quotient kind: '" + g.kind + "'");
        const Range l = range_or(g.l, {1, 10});
        const Range a = range_or(g.a, {1, 3});
        const Range n = range_or(g.n, {1, 15});
        for (const QuotientKind kind : kinds)
            for (long long lv = l.lo; lv <= l.hi; ++lv)
                for (long long av = a.lo; av <= a.hi; ++av) {
                    const Range u = range_or(g.u, {0, av});
                    for (long long uv = u.lo; uv <= std::min(u.hi, av); ++uv)
                        for (long long nv = n.lo; nv <= n.hi; ++nv)
                            work.emplace_back([=] {
                                return identities::check_quotient_family(kind, lv, av, uv, nv);
                            });
                }
    } else if (g.id == "pairing") {
        const Range l = range_or(g.l, {1, 10});
        const Range n = range_or(g.n, {1, 15});
        for (long long lv = l.lo; lv <= l.hi; ++lv)
            for (long long nv = n.lo; nv <= n.hi; ++nv)
                work.emplace_back([=] { return identities::check_schroder_alt_pairing(lv, nv); });
    } else {
        throw std::domain_error("unknown lemma id: '" + g.id + "'");
    }

    if (work.empty()) throw std::domain_error("the requested sweep is empty");
    return work;
}

struct VerifyArgs {
    std::string check;
    std::string family;
    std::string n, h, m, a;
    std::string eps;
    bool family_given = false;
    bool a_given = false;
};

std::vector<Family> verify_families(const VerifyArgs& g) {
    const bool fixed = g.check == "delannoy-weighted" || g.check == "delannoy-alternating" ||
                       g.check == "schroder-weighted";
    if (fixed) {
        if (g.family_given)
            throw std::domain_error("--family is implied by --check " + g.check);
        return {g.check == "schroder-weighted" ? Family::Schroder : Family::Delannoy};
    }
    const std::string fam = !g.family.empty() ? g.family : (g.check == "prefix" ? "D" : "both");
    if (fam == "both") return {Family::Delannoy, Family::Schroder};
    return {sequences::family_from_letter(fam[0])};
}

std::vector<std::function<DivisibilityReport()>> verify_work(const VerifyArgs& g) {
    const Range n = range_or(g.n, {1, 25});
    const Range h = range_or(g.h, {1, 3});
    const Range m = range_or(g.m, {1, 3});
    const bool order_one = g.check == "order-one";
    if (order_one && g.a_given) throw std::domain_error("order-one fixes a = 1");
    const Range a = order_one ? Range{1, 1} : range_or(g.a, {1, 3});
    const std::string eps =
        !g.eps.empty() ? g.eps : (g.check == "delannoy-alternating" ? "minus" : "both");
    const std::vector<int> epss = eps_values(eps);
    const std::vector<Family> fams = verify_families(g);

    std::vector<std::function<DivisibilityReport()>> work;
    for (const Family fam : fams)
        for (long long nv = n.lo; nv <= n.hi; ++nv)
            for (long long hv = h.lo; hv <= h.hi; ++hv)
                for (long long mv = m.lo; mv <= m.hi; ++mv)
                    for (long long av = a.lo; av <= a.hi; ++av)
                        for (const int ev : epss) {
                            const SumSpec spec{fam, nv, hv, mv, av, ev};
                            if (g.check == "delannoy-weighted")
                                work.emplace_back(
                                    [=] { return theorems::check_delannoy_weighted(spec); });
                            else if (g.check == "delannoy-alternating")
                                work.emplace_back(
                                    [=] { return theorems::check_delannoy_alternating(spec); });
                            else if (g.check == "schroder-weighted")
                                work.emplace_back(
                                    [=] { return theorems::check_schroder_weighted(spec); });
                            else if (g.check == "order-one")
                                work.emplace_back([=] {
                                    return theorems::check_order_one_weight(fam, nv, hv, mv, ev);
                                });
                            else if (g.check == "prefix")
                                work.emplace_back(
                                    [=] { return theorems::check_prefix_congruence(spec); });
                            else
                                throw std::domain_error("unknown check: '" + g.check + "'");
                        }
    if (work.empty()) throw std::domain_error("the requested sweep is empty");
    return work;
}

struct ProbeArgs {
    std::string check;
    std::string n, h, m, a;
    std::string eps;
};

int run_probe(const ProbeArgs& g, const Common& c, std::ostream& out) {
    const Format format = report_io::parse_format(c.format);
    const Range n = range_or(g.n, {1, 25});
    const Range h = range_or(g.h, {1, 3});
    const Range m = range_or(g.m, {1, 3});
    const Range a = range_or(g.a, {1, 3});
    const std::string eps =
        !g.eps.empty() ? g.eps : (g.check == "delannoy-alternating" ? "minus" : "both");
    const std::vector<int> epss = eps_values(eps);
    const Family fam =
        g.check == "schroder-weighted" ? Family::Schroder : Family::Delannoy;

    std::vector<SumSpec> specs;
    for (long long nv = n.lo; nv <= n.hi; ++nv)
        for (long long hv = h.lo; hv <= h.hi; ++hv)
            for (long long mv = m.lo; mv <= m.hi; ++mv)
                for (long long av = a.lo; av <= a.hi; ++av)
                    for (const int ev : epss) specs.push_back({fam, nv, hv, mv, av, ev});

    const auto batches = sweep::run<std::vector<DivisibilityReport>>(
        specs.size(), pick_jobs(c), c.ci,
        [&](std::size_t i) { return theorems::probe_full_modulus(g.check, {specs[i]}); },
        [](const std::vector<DivisibilityReport>& b) { return !b.empty(); });

    std::vector<Record> recs;
    bool any = false;
    for (const auto& batch : batches)
        for (const DivisibilityReport& r : batch) {
            any = true;
            recs.push_back(report_io::from(r));
        }
    report_io::emit(out, recs, format);
    return any ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact divisibility laboratory for Delannoy and Schroeder polynomials"};
    app.name("dlab");
    app.require_subcommand(1);
    // --h is a sweep parameter on several subcommands, so help is long-form only.
    app.set_help_flag("--help", "print help");

    PolyArgs poly_args;
    CoeffArgs coeff_args;
    LemmaArgs lemma_args;
    VerifyArgs verify_args;
    ProbeArgs probe_args;
    Common poly_common, coeff_common, lemma_common, verify_common, probe_common;

    auto* poly = app.add_subcommand("poly", "print family polynomials");
    poly->set_help_flag("--help", "print help");
    poly->add_option("--family", poly_args.family, "D or S")
        ->required()
        ->check(CLI::IsMember({"D", "S"}));
    poly->add_option("--n", poly_args.n, "order (single value or lo..hi)")->required();
    poly->add_option("--h", poly_args.h, "power weight")->capture_default_str();
    poly->add_option("--m", poly_args.m, "outer power")->capture_default_str();
    poly->add_option("--format", poly_common.format, "pretty, jsonl or csv")
        ->check(CLI::IsMember({"pretty", "jsonl", "csv"}))
        ->capture_default_str();

    auto* coeff = app.add_subcommand("coeff", "dump an expansion table slice");
    coeff->set_help_flag("--help", "print help");
    coeff->add_option("--table", coeff_args.table, "table name")
        ->required()
        ->check(CLI::IsMember({"newton", "weight", "power", "scaled-power", "pair", "scaled-pair",
                               "product", "scaled-product", "power-product",
                               "scaled-power-product"}));
    coeff->add_option("--l", coeff_args.l, "l range");
    coeff->add_option("--a", coeff_args.a, "a range");
    coeff->add_option("--i", coeff_args.i, "i range");
    coeff->add_option("--j", coeff_args.j, "j range");
    coeff->add_option("--h", coeff_args.h, "h range");
    coeff->add_option("--indices", coeff_args.indices, "comma-separated tuple for product tables")
        ->capture_default_str();
    coeff->add_option("--format", coeff_common.format, "pretty, jsonl or csv")
        ->check(CLI::IsMember({"pretty", "jsonl", "csv"}))
        ->capture_default_str();

    auto* lemma = app.add_subcommand("lemma", "sweep a supporting identity or parity fact");
    lemma->set_help_flag("--help", "print help");
    lemma->add_option("--id", lemma_args.id, "check id")
        ->required()
        ->check(CLI::IsMember({"telescope", "telescope-sum", "half-product", "convolution",
                               "newton-head-parity", "w-parity", "w-pair", "diagonal-parity",
                               "pair-parity", "tilde-parity-odd", "tilde-parity-even", "quotients",
                               "pairing"}));
    lemma->add_option("--l", lemma_args.l, "l range");
    lemma->add_option("--u", lemma_args.u, "u range");
    lemma->add_option("--n", lemma_args.n, "n range");
    lemma->add_option("--b", lemma_args.b, "b range");
    lemma->add_option("--J", lemma_args.J, "J range");
    lemma->add_option("--M", lemma_args.M, "M range");
    lemma->add_option("--I", lemma_args.I, "I range (filtered to the required parity)");
    lemma->add_option("--a", lemma_args.a, "a range");
    lemma->add_option("--h", lemma_args.h, "h range");
    lemma->add_option("--x", lemma_args.x, "x range");
    lemma->add_option("--y", lemma_args.y, "y range");
    lemma->add_option("--e", lemma_args.e, "e range (even values)");
    lemma->add_option("--kind", lemma_args.kind, "quotient family filter")
        ->check(CLI::IsMember({"all", "delannoy-alt", "schroder-pos", "schroder-alt"}))
        ->capture_default_str();
    lemma->add_option("--eps", lemma_args.eps, "telescope sign")
        ->check(CLI::IsMember({"both", "plus", "minus"}))
        ->capture_default_str();
    lemma->add_option("--kmax", lemma_args.kmax, "largest summand index")->capture_default_str();
    lemma->add_option("--nmax", lemma_args.nmax, "largest partial sum")->capture_default_str();
    add_common(lemma, lemma_common);

    auto* verify = app.add_subcommand("verify", "sweep a divisibility claim");
    verify->set_help_flag("--help", "print help");
    verify->add_option("--check", verify_args.check, "check id")
        ->required()
        ->check(CLI::IsMember({"delannoy-weighted", "delannoy-alternating", "schroder-weighted",
                               "order-one", "prefix"}));
    verify->add_option("--family", verify_args.family, "D, S or both (order-one and prefix only)")
        ->check(CLI::IsMember({"D", "S", "both"}));
    verify->add_option("--n", verify_args.n, "n range");
    verify->add_option("--h", verify_args.h, "h range");
    verify->add_option("--m", verify_args.m, "m range");
    verify->add_option("--a", verify_args.a, "a range");
    verify->add_option("--eps", verify_args.eps, "both, plus or minus")
        ->check(CLI::IsMember({"both", "plus", "minus"}));
    add_common(verify, verify_common);

    auto* probe = app.add_subcommand(
        "probe", "rerun a divisibility claim at the full modulus n(n+1)(n+2), report failures");
    probe->set_help_flag("--help", "print help");
    probe->add_option("--check", probe_args.check, "check id")
        ->required()
        ->check(CLI::IsMember(
            {"delannoy-weighted", "delannoy-alternating", "schroder-weighted"}));
    probe->add_option("--n", probe_args.n, "n range");
    probe->add_option("--h", probe_args.h, "h range");
    probe->add_option("--m", probe_args.m, "m range");
    probe->add_option("--a", probe_args.a, "a range");
    probe->add_option("--eps", probe_args.eps, "both, plus or minus")
        ->check(CLI::IsMember({"both", "plus", "minus"}));
    add_common(probe, probe_common);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("dlab");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }
    verify_args.family_given = verify->count("--family") > 0;
    verify_args.a_given = verify->count("--a") > 0;

    try {
        if (poly->parsed()) return run_poly(poly_args, poly_common, out);
        if (coeff->parsed()) return run_coeff(coeff_args, coeff_common, out);
        if (lemma->parsed()) return sweep_and_emit(lemma_work(lemma_args), lemma_common, out);
        if (verify->parsed()) return sweep_and_emit(verify_work(verify_args), verify_common, out);
        if (probe->parsed()) return run_probe(probe_args, probe_common, out);
    } catch (const invariant_error& e) {
        err << "invariant violated: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace dlab::cli
