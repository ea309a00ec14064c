#include "mfh/cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mfh/braidword/braid.hpp"
#include "mfh/exactla/field_rank.hpp"
#include "mfh/exactla/int_matrix.hpp"
#include "mfh/milnorfiber/milnor.hpp"

namespace mfh {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kCommands{"present", "alexander", "depth", "charvar", "milnor", "snf", "verify"};
const std::vector<std::string> kPresentations{"deconed", "prefix", "alternate", "cone"};

struct Check {
    std::string name;
    std::string computed;
    std::string expected;
    bool pass = false;
};

struct Report {
    json doc;
    std::ostringstream text;
    std::vector<Check> checks;
};

std::string join(const std::vector<BigInt>& v, const std::string& sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
    return s;
}

json to_json(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
        rows.push_back(r);
    }
    return rows;
}

json to_json(const AbelianGroup& g) {
    return json{{"free_rank", g.free_rank}, {"torsion", to_json(g.torsion)}, {"text", g.to_string()}};
}

std::string matrix_text(const IntMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).get_str();
        s += "]\n";
    }
    return s;
}

ArrangementSpec spec_of(const RunConfig& cfg) { return arrangement_spec(cfg.p, cfg.mult); }

GroupPresentation presentation_of(const std::string& kind, int p) {
    if (kind == "prefix") return build_prefix_deconed_presentation(p);
    if (kind == "alternate") return build_alternate_deconed_presentation(p);
    if (kind == "cone") return build_cone_presentation(p);
    return build_deconed_presentation(p);
}

std::vector<long long> per_generator(const std::string& kind, const ArrangementSpec& s, const std::vector<long long>& h) {
    if (kind == "cone") return s.to_cone(h);
    const auto d = s.to_deconed(h);
    if (kind == "prefix") return deconed_to_prefix(s.p, d);
    if (kind == "alternate") return deconed_to_alternate(s.p, d);
    return d;
}

json character_json(const Character& ch) {
    return json{{"p", ch.p}, {"order", ch.order}, {"field", ch.field.name()}, {"exponents", ch.exponents}};
}

Character read_character(const RunConfig& cfg) {
    std::ifstream in(cfg.char_file);
    if (!in) throw std::invalid_argument("cannot read character file " + cfg.char_file);
    const json j = json::parse(in);
    const int p = j.value("p", cfg.p);
    if (p != cfg.p) throw std::invalid_argument("character file is for p = " + std::to_string(p));
    const long long order = j.at("order").get<long long>();
    const std::string sel = cfg.field ? *cfg.field : j.value("field", std::string("Q(zeta)"));
    return Character(p, order, j.at("exponents").get<std::vector<long long>>(), parse_field(sel, order));
}

ProgressFn progress_printer(const RunConfig& cfg, std::ostream& diag, const std::string& label) {
    if (cfg.quiet) return {};
    auto last = std::make_shared<int>(-1);
    return [&diag, label, last](std::size_t done, std::size_t total) {
        if (total < 100) return;
        const int pct = total ? static_cast<int>(100 * done / total) : 100;
        if (pct / 10 == *last / 10 && pct != 100) return;
        if (pct == *last) return;
        *last = pct;
        diag << label << ": " << pct << "%\n" << std::flush;
    };
}

void cmd_present(const RunConfig& cfg, Report& r) {
    const ArrangementSpec s = spec_of(cfg);
    const GroupPresentation pr = presentation_of(cfg.presentation, cfg.p);
    r.doc["arrangement"] = json::parse(s.to_json());
    r.doc["presentation_kind"] = cfg.presentation;
    r.doc["presentation"] = json::parse(pr.to_json());
    r.text << "arrangement p=" << s.p << " N=" << s.total_degree << " deconed at " << s.deconed_at << "\n";
    r.text << "multiplicities";
    for (int i = 0; i < s.size(); ++i) r.text << " " << s.labels[i] << "=" << s.multiplicities[i];
    r.text << "\n" << cfg.presentation << " presentation: " << pr.num_generators() << " generators, " << pr.num_relators()
           << " relators\ngenerators";
    for (const auto& g : pr.generators()) r.text << " " << g;
    r.text << "\n";
    for (int i = 0; i < pr.num_relators(); ++i) r.text << "r" << i + 1 << " = " << pr.relators()[i].to_string(pr.generators()) << "\n";
}

void cmd_alexander(const RunConfig& cfg, Report& r) {
    const ArrangementSpec s = spec_of(cfg);
    const GroupPresentation pr = presentation_of(cfg.presentation, cfg.p);
    const LaurentMatrix A = alexander_matrix(pr);
    r.doc["presentation_kind"] = cfg.presentation;
    r.doc["rows"] = A.rows();
    r.doc["cols"] = A.cols();
    json entries = json::array();
    auto emit = [&](std::size_t i, std::size_t j, const std::string& v) {
        entries.push_back(json::array({i + 1, j + 1, v}));
        r.text << i + 1 << " " << j + 1 << " " << v << "\n";
    };
    if (!cfg.k) {
        r.doc["coefficients"] = "laurent";
        r.text << A.rows() << " " << A.cols() << "\n";
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j)
                if (!A(i, j).is_zero()) emit(i, j, A(i, j).to_string(pr.generators()));
        r.doc["entries"] = entries;
        return;
    }
    const long long k = *cfg.k;
    if (k < 1 || s.total_degree % k != 0)
        throw std::invalid_argument("k = " + std::to_string(k) + " does not divide N = " + std::to_string(s.total_degree));
    std::vector<long long> h;
    for (long long a : s.multiplicities) h.push_back(floor_mod(a, k));
    const CyclicCharacter ch{per_generator(cfg.presentation, s, h), k};
    const std::string sel = cfg.field.value_or("Q(zeta)");
    r.doc["k"] = k;
    r.doc["coefficients"] = sel;
    if (sel == "Z" || sel == "Z[G]") {
        IntMatrix m;
        if (sel == "Z[G]") {
            m = specialize_groupring(A, ch);
        } else {
            if (k > 2) throw std::invalid_argument("integer values need k <= 2");
            m = IntMatrix(A.rows(), A.cols(), BigInt(0));
            for (std::size_t i = 0; i < A.rows(); ++i)
                for (std::size_t j = 0; j < A.cols(); ++j) {
                    const auto bins = to_group_ring(A(i, j), ch);
                    for (std::size_t b = 0; b < bins.size(); ++b) m(i, j) += (b % 2 ? -1 : 1) * bins[b];
                }
        }
        r.doc["rows"] = m.rows();
        r.doc["cols"] = m.cols();
        r.text << to_sparse_string(m);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j) != 0) entries.push_back(json::array({i + 1, j + 1, m(i, j).get_str()}));
        r.doc["entries"] = entries;
        return;
    }
    const Field f = parse_field(sel, s.total_degree);
    const Matrix<FieldScalar> m = specialize_character(A, ch, f);
    r.doc["field"] = f.name();
    r.doc["rank"] = rank_over_field(m);
    r.text << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) emit(i, j, m(i, j).to_string());
    r.doc["entries"] = entries;
}

void cmd_depth(const RunConfig& cfg, Report& r) {
    const ArrangementSpec s = spec_of(cfg);
    const Character ch = cfg.char_file.empty()
                             ? character_tk(s, *cfg.k, parse_field(cfg.field.value_or("Q(zeta)"), s.total_degree))
                             : read_character(cfg);
    const std::size_t d = depth(ch);
    if (cfg.k) r.doc["k"] = *cfg.k;
    r.doc["character"] = character_json(ch);
    r.doc["depth"] = d;
    r.text << d << "\n";
}

void cmd_charvar(const RunConfig& cfg, Report& r) {
    const int p = cfg.p;
    const long long m = cfg.u_order > 0 ? cfg.u_order : 1;
    const std::string sel = cfg.field.value_or("Q(zeta)");
    long long order = std::lcm(m, 2LL);
    if (sel.rfind("F", 0) != 0 || std::stoll(sel.substr(1)) != p) order = std::lcm(order, static_cast<long long>(p));
    const Field f = parse_field(sel, order);
    const FieldScalar u = f.root_of_unity(m, cfg.u_exp);
    CVPoint pt = cfg.component == 0 ? t_point(p, u) : cv_component_point(p, cfg.component, u);
    if (cfg.translate) pt = family_point(p, -f.one(), -f.one(), f.one()) * pt;
    const std::size_t d = depth(pt);
    json coords = json::array();
    for (const auto& c : pt.coordinates) coords.push_back(c.to_string());
    r.doc["component"] = cfg.component == 0 ? std::string("T") : "C" + std::to_string(cfg.component);
    r.doc["u"] = json{{"order", m}, {"exponent", cfg.u_exp}};
    r.doc["translated"] = cfg.translate;
    r.doc["field"] = f.name();
    r.doc["degenerate"] = pt.degenerate;
    r.doc["coordinates"] = coords;
    r.doc["depth"] = d;
    r.text << "point " << r.doc["component"].get<std::string>() << (cfg.translate ? " translated" : "") << " over "
           << f.name() << (pt.degenerate ? " (degenerate: characteristic p, C_i passes through 1)" : "") << "\n";
    for (std::size_t i = 0; i < pt.coordinates.size(); ++i)
        r.text << "  " << hyperplane_labels(p)[i] << " = " << pt.coordinates[i].to_string() << "\n";
    r.text << "depth = " << d << "\n";
}

void field_report(const FieldHomology& h, json& doc, std::ostream& text) {
    doc["field"] = h.field.name();
    doc["N"] = h.N;
    doc["dimension"] = h.dimension;
    json dk = json::array();
    for (const auto& [k, d] : h.depth_by_divisor) dk.push_back(json{{"k", k}, {"depth", d}});
    doc["depth_by_divisor"] = dk;
    doc["eigenspaces"] = h.eigenspaces;
    doc["eigenspace_total"] = h.eigenspace_total();
    text << "field " << h.field.name() << ", N = " << h.N << "\n";
    text << "dim H1 = " << h.dimension << "\n";
    for (const auto& [k, d] : h.depth_by_divisor) text << "depth t(" << k << ") = " << d << "\n";
    text << "eigenspaces:";
    for (std::size_t j = 0; j < h.eigenspaces.size(); ++j) text << " " << j << ":" << h.eigenspaces[j];
    text << "\neigenspace total = " << h.eigenspace_total() << "\n";
}

void integral_report(const IntegralHomology& h, json& doc, std::ostream& text) {
    doc["H1"] = to_json(h.group);
    doc["torsion_primes"] = to_json(h.torsion_primes);
    doc["envelope"] = to_json(h.envelope);
    doc["envelope_ok"] = h.envelope_ok;
    doc["p_primary"] = to_json(h.p_primary);
    json mono = json::array();
    for (const auto& m : h.monodromy)
        mono.push_back(json{{"prime", m.prime.get_str()},
                            {"orders", to_json(m.orders)},
                            {"action", to_json(m.action)},
                            {"action_order", m.action_order}});
    doc["torsion_monodromy"] = mono;
    doc["free_monodromy_order"] = h.free_monodromy_order;
    text << "H1 = " << h.group.to_string() << "\n";
    text << "torsion primes: " << (h.torsion_primes.empty() ? "none" : join(h.torsion_primes)) << " (envelope "
         << join(h.envelope) << ", " << (h.envelope_ok ? "inside" : "OUTSIDE") << ")\n";
    for (const auto& m : h.monodromy) {
        text << "monodromy on " << m.prime.get_str() << "-part (orders " << join(m.orders) << "), order "
             << m.action_order << ":\n"
             << matrix_text(m.action);
    }
    text << "monodromy on free part: order " << h.free_monodromy_order << "\n";
}

void cmd_milnor(const RunConfig& cfg, Report& r, std::ostream& diag) {
    const ArrangementSpec s = spec_of(cfg);
    r.doc["arrangement"] = json::parse(s.to_json());
    if (cfg.field) {
        field_report(milnor_h1_field(s, parse_field(*cfg.field, s.total_degree), cfg.threads), r.doc, r.text);
        return;
    }
    const IntegralHomology h = milnor_h1_integral(s, progress_printer(cfg, diag, "smith"));
    integral_report(h, r.doc, r.text);
    if (!h.envelope_ok)
        r.checks.push_back({"torsion envelope", join(h.torsion_primes), join(h.envelope), false});
}

void cmd_snf(const RunConfig& cfg, Report& r, std::ostream& diag) {
    if (cfg.input.empty()) throw std::invalid_argument("snf needs a matrix file");
    std::ifstream in(cfg.input);
    if (!in) throw std::invalid_argument("cannot read matrix file " + cfg.input);
    std::stringstream buf;
    buf << in.rdbuf();
    const IntMatrix m = parse_matrix(buf.str());
    const SmithForm f = smith_normal_form(m, progress_printer(cfg, diag, "smith"));
    r.doc["rows"] = m.rows();
    r.doc["cols"] = m.cols();
    r.doc["invariant_factors"] = to_json(f.invariant_factors);
    r.doc["rank"] = f.rank();
    r.text << join(f.invariant_factors) << "\n";
}

std::string depth_list(const std::vector<std::pair<long long, std::size_t>>& v) {
    std::string s;
    for (const auto& [k, d] : v) s += (s.empty() ? "" : ", ") + std::to_string(k) + ":" + std::to_string(d);
    return s;
}

void cmd_verify(const RunConfig& cfg, Report& r, std::ostream& diag) {
    const int p = cfg.p;
    const ArrangementSpec s = arrangement_spec(p);
    const long long N = s.total_degree;
    auto check = [&](std::string name, std::string computed, std::string expected, bool pass) {
        r.checks.push_back({std::move(name), std::move(computed), std::move(expected), pass});
    };
    auto yes = [](bool b) { return std::string(b ? "holds" : "fails"); };

    const BraidIdentityReport b = check_braid_identities(p);
    check("braid: tau A12^(p) tau^-1 = A12 A34 ... A(2p-1)(2p)", yes(b.afrak_combing), "holds", b.afrak_combing);
    check("braid: tau Z1 tau^-1 = odd full twist", yes(b.zfrak_combing), "holds", b.zfrak_combing);
    if (p % 2 == 1) {
        check("braid: zfrak action formula", yes(b.zfrak_action), "holds", b.zfrak_action);
        check("braid: afrak action formula", yes(b.afrak_action), "holds", b.afrak_action);
    }

    const Field Q = Field::cyclotomic(N);
    const Field Fp = Field::finite(p, N);
    std::uint32_t q_other = 3;
    while (!is_prime(q_other) || (2 * p * N) % q_other == 0) ++q_other;
    const Field Fo = Field::finite(q_other, N);
    // Characteristic-0 and characteristic-p dimensions, plus the only depth
    // pattern consistent with them for p = 2.
    const std::size_t dim0 = 3 * p + 1, dimp = p == 2 ? 9 : 3 * p + 2;
    const FieldHomology h0 = milnor_h1_field(s, Q, cfg.threads);
    const FieldHomology hp = milnor_h1_field(s, Fp, cfg.threads);
    const FieldHomology ho = milnor_h1_field(s, Fo, cfg.threads);
    std::vector<std::pair<long long, std::size_t>> want0, wantp;
    for (const auto& [k, d] : h0.depth_by_divisor) {
        want0.emplace_back(k, 0);
        wantp.emplace_back(k, k == (p == 2 ? 3 : 2) ? 1 : 0);
    }
    check("depth t(k) over " + Q.name(), depth_list(h0.depth_by_divisor), depth_list(want0), h0.depth_by_divisor == want0);
    check("depth t(k) over " + Fo.name(), depth_list(ho.depth_by_divisor), depth_list(want0), ho.depth_by_divisor == want0);
    check("depth t(k) over " + Fp.name(), depth_list(hp.depth_by_divisor), depth_list(wantp), hp.depth_by_divisor == wantp);

    if (p % 2 == 1) {
        RunConfig sub = cfg;
        sub.presentation = "alternate";
        sub.k = 2;
        sub.field = "Z";
        Report a;
        cmd_alexander(sub, a);
        const SmithForm f = smith_normal_form(parse_sparse(a.text.str()));
        std::vector<BigInt> want(3 * p - 1, BigInt(2));
        want.push_back(2 * p);
        check("SNF A(2)", join(f.invariant_factors), join(want), f.invariant_factors == want);
    }

    check("dim H1 over " + Q.name(), std::to_string(h0.dimension), std::to_string(dim0), h0.dimension == dim0);
    check("dim H1 over " + Fo.name(), std::to_string(ho.dimension), std::to_string(dim0), ho.dimension == dim0);
    check("dim H1 over " + Fp.name(), std::to_string(hp.dimension), std::to_string(dimp), hp.dimension == dimp);
    for (const FieldHomology* h : {&h0, &ho, &hp})
        check("eigenspace total over " + h->field.name(), std::to_string(h->eigenspace_total()),
              std::to_string(h->dimension), h->eigenspace_total() == h->dimension);

    const IntegralHomology ih = milnor_h1_integral(s, progress_printer(cfg, diag, "smith"));
    r.doc["integral"] = json::object();
    std::ostringstream unused;
    integral_report(ih, r.doc["integral"], unused);
    const PrimaryMonodromy* pm = nullptr;
    for (const auto& m : ih.monodromy)
        if (m.prime == p) pm = &m;
    if (p == 2) {
        const std::string got = pm ? std::to_string(pm->action_order) : "none";
        check("monodromy order on 2-torsion", got, "3", pm && pm->action_order == 3);
        const std::string want = "Z^7 + Z/2 + Z/2";
        check("H1", ih.group.to_string(), want, ih.group.to_string() == want);
    } else {
        const bool neg = pm && pm->action.rows() == 1 && floor_mod(BigInt(pm->action(0, 0) % p).get_si(), p) == p - 1;
        check("monodromy on Z/" + std::to_string(p), !pm ? "none" : neg ? "x -> -x" : "x -> " + pm->action(0, 0).get_str() + "x",
              "x -> -x", neg);
        check("torsion primes", ih.torsion_primes.empty() ? "none" : join(ih.torsion_primes),
              "subset of " + join(ih.envelope), ih.envelope_ok);
        const bool ok = ih.group.free_rank == dim0 && ih.p_primary == std::vector<BigInt>{BigInt(p)} && ih.envelope_ok;
        check("H1", ih.group.to_string(),
              "Z^" + std::to_string(dim0) + " + Z/" + std::to_string(p) + " + T, T supported on " +
                  join(prime_divisors(BigInt(2 * (2 * p + 1)))),
              ok);
    }
}

}  // namespace

Field parse_field(const std::string& sel, long long root_order) {
    if (root_order < 1) throw std::invalid_argument("root order must be positive");
    if (sel == "Q(zeta)") return Field::cyclotomic(root_order);
    if (sel == "Q") {
        if (root_order > 2) throw std::invalid_argument("Q has no root of unity of order " + std::to_string(root_order));
        return Field::rationals();
    }
    if (sel.size() > 1 && sel[0] == 'F' && std::all_of(sel.begin() + 1, sel.end(), ::isdigit)) {
        const unsigned long q = std::stoul(sel.substr(1));
        if (!is_prime(q)) throw std::invalid_argument("F<q> needs q prime, got " + sel);
        if (root_order % q == 0)
            throw std::invalid_argument("characteristic " + std::to_string(q) + " divides the root order " +
                                        std::to_string(root_order));
        return Field::finite(static_cast<std::uint32_t>(q), static_cast<std::uint64_t>(root_order));
    }
    throw std::invalid_argument("unknown field selector '" + sel + "' (expected Q(zeta), Q or F<q>)");
}

void validate(const RunConfig& cfg) {
    if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end())
        throw std::invalid_argument("unknown command '" + cfg.command + "'");
    if (cfg.format != "text" && cfg.format != "structured")
        throw std::invalid_argument("--format must be text or structured");
    if (std::find(kPresentations.begin(), kPresentations.end(), cfg.presentation) == kPresentations.end())
        throw std::invalid_argument("unknown presentation '" + cfg.presentation + "'");
    if (cfg.command == "snf") return;
    if (cfg.p < 2 || !is_prime(static_cast<std::uint64_t>(cfg.p))) throw std::invalid_argument("--p must be a prime");
    if (cfg.presentation == "alternate" && cfg.p % 2 == 0)
        throw std::invalid_argument("the alternate presentation needs odd p");
    if (cfg.threads == 0) throw std::invalid_argument("--threads must be positive");
    if (cfg.command == "verify") {
        if (cfg.p > cfg.max_p)
            throw std::invalid_argument("p = " + std::to_string(cfg.p) + " exceeds --max-p " + std::to_string(cfg.max_p));
        if (cfg.mult) throw std::invalid_argument("verify uses the default multiplicities");
    }
    if (cfg.command == "depth" && !cfg.k && cfg.char_file.empty())
        throw std::invalid_argument("depth needs --k or --char-file");
    if (cfg.command == "charvar") {
        if (cfg.component < 0 || cfg.component >= cfg.p) throw std::invalid_argument("--i must lie in 0..p-1");
        if (cfg.u_order < 0) throw std::invalid_argument("--order must be positive");
    }
    if (cfg.command == "milnor" && cfg.field) {
        const ArrangementSpec s = arrangement_spec(cfg.p, cfg.mult);
        parse_field(*cfg.field, s.total_degree);
    }
}

RunResult run(const RunConfig& cfg, std::ostream& diag) {
    RunResult res;
    try {
        validate(cfg);
        Report r;
        r.doc["command"] = cfg.command;
        if (cfg.command != "snf") r.doc["p"] = cfg.p;
        if (cfg.command == "present") cmd_present(cfg, r);
        else if (cfg.command == "alexander") cmd_alexander(cfg, r);
        else if (cfg.command == "depth") cmd_depth(cfg, r);
        else if (cfg.command == "charvar") cmd_charvar(cfg, r);
        else if (cfg.command == "milnor") cmd_milnor(cfg, r, diag);
        else if (cfg.command == "snf") cmd_snf(cfg, r, diag);
        else cmd_verify(cfg, r, diag);

        bool ok = true;
        json checks = json::array();
        for (const auto& c : r.checks) {
            ok = ok && c.pass;
            checks.push_back(json{{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"pass", c.pass}});
            r.text << c.name << " = " << c.computed;
            if (!c.pass) r.text << " (expected " << c.expected << ")";
            r.text << " : " << (c.pass ? "PASS" : "FAIL") << "\n";
        }
        if (!r.checks.empty()) r.doc["checks"] = checks;
        r.doc["status"] = ok ? "pass" : "fail";
        res.status = ok ? 0 : 1;
        res.report = cfg.format == "structured" ? r.doc.dump(2) + "\n" : r.text.str();
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        res.status = 2;
        res.report.clear();
    }
    return res;
}

}  // namespace mfh
