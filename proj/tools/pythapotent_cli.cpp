// Command-line surface for the pythapotent library.
//
// Exit codes: 0 = success / certified, 1 = mathematical negative (not
// pythagorean, verdict unknown, verification failure), 2 = usage error.
// Every number printed is exact decimal; no rounding anywhere.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <pythapotent/pythapotent.hpp>

namespace pp = pythapotent;

namespace {

std::string order_label(const std::optional<int>& order) {
    return order ? "order " + std::to_string(*order) : "non-torsion";
}

void print_witness(const pp::PairWitness& w, const pp::Curve& c) {
    std::cout << "k = " << w.k.get_str() << "\n";
    std::cout << "l = " << w.l.get_str() << "\n";
    std::cout << "inner hypotenuse = " << w.inner_hyp.get_str() << "   (k^2 + l^2 = "
              << pp::Int(w.k * w.k + w.l * w.l).get_str() << ")\n";
    std::cout << "outer hypotenuse = " << w.outer_hyp.get_str() << "   ((a^h k)^2 + (b^h l)^2 = "
              << pp::Int(c.ah * c.ah * w.k * w.k + c.bh * c.bh * w.l * w.l).get_str()
              << ")\n";
}

int cmd_check(const std::string& a, const std::string& b) {
    pp::PythagoreanPair pr = pp::make_pair(pp::parse_int(a), pp::parse_int(b));
    std::cout << "c=" << pr.c.get_str() << "\n";
    return 0;
}

int cmd_curve(const std::string& a, const std::string& b, unsigned long h) {
    pp::Curve c = pp::make_curve(pp::parse_int(a), pp::parse_int(b), h);
    std::cout << "y^2 = x^3 + A x^2 + B x\n";
    std::cout << "A = " << c.A.get_str() << "\n";
    std::cout << "B = " << c.B.get_str() << "\n";
    std::cout << "torsion points:\n";
    for (const auto& t : pp::torsion_points(c))
        std::cout << "  " << t.point.str() << "  order " << t.order << "\n";
    if (c.h == 2)
        std::cout << "note: at degree 2 these eight points are a proper subgroup of the "
                     "full torsion\n";
    return 0;
}

int cmd_derive(const std::string& a, const std::string& b, unsigned long h,
               const std::vector<std::string>& point) {
    pp::Curve c = pp::make_curve(pp::parse_int(a), pp::parse_int(b), h);
    pp::Point p = pp::Point::affine(pp::parse_rat(point[0]), pp::parse_rat(point[1]));
    pp::require_on_curve(c, p);
    pp::Derivation d = pp::derive_trace(c, p);
    std::cout << "P = " << p.str() << "  (" << order_label(pp::classify_order(c, p))
              << ")\n";
    std::cout << "x([2]P) = " << d.x2.str() << "\n";
    std::cout << "g/f = " << d.gf.str() << "\n";
    std::cout << "radical g^2 + b^(2h) f^2 = " << d.radical.get_str() << " = "
              << d.radical_root.get_str() << "^2\n";
    std::cout << "t = r/s = " << d.r.get_str() << "/" << d.s.get_str() << "  (branch "
              << d.branch << ")\n";
    std::cout << "raw pair (" << d.k0.get_str() << ", " << d.l0.get_str() << "), gcd "
              << pp::gcd(d.k0, d.l0).get_str() << "\n";
    print_witness(d.witness, c);
    return 0;
}

int cmd_search(const std::string& a, const std::string& b, unsigned long h,
               unsigned long max_w, const std::string& max_u, unsigned count) {
    pp::SearchBound bound{max_w, pp::parse_int(max_u)};
    pp::Int ia = pp::parse_int(a), ib = pp::parse_int(b);
    pp::Verdict v = pp::pythapotent_verdict(ia, ib, h, bound);
    if (!v.is_potent()) {
        std::cout << "verdict: UNKNOWN within max_w=" << bound.max_w
                  << ", max_u=" << bound.max_u.get_str()
                  << " (bounded search is not a rank proof)\n";
        return 1;
    }
    pp::Curve c = pp::make_curve(ia, ib, h);
    std::cout << "verdict: POTENT (degree " << h << ")\n";
    std::cout << "generator = " << v.generator->str() << "\n";
    print_witness(*v.witness, c);
    if (count > 1) {
        auto ws = pp::multi_witness(c, *v.generator, count);
        std::cout << "witness family (from successive even multiples):\n";
        for (const auto& w : ws)
            std::cout << "  (" << w.k.get_str() << ", " << w.l.get_str()
                      << ")  outer hypotenuse " << w.outer_hyp.get_str() << "\n";
    }
    return 0;
}

int cmd_cubic(const std::string& m, const std::string& n) {
    pp::MnParams mn{pp::parse_int(m), pp::parse_int(n)};
    pp::PythagoreanPair pr = pp::pair_from_mn(mn);
    pp::Curve c = pp::make_curve(pr.a, pr.b, 3);
    pp::Point p = pp::cubic_point(mn);
    pp::PairWitness w = pp::cubic_pair(mn);
    std::cout << "(a,b) = (" << pr.a.get_str() << ", " << pr.b.get_str() << "), c = "
              << pr.c.get_str() << "\n";
    std::cout << "degree-3 point = " << p.str() << "  ("
              << order_label(pp::classify_order(c, p)) << ")\n";
    print_witness(w, c);
    return 0;
}

int cmd_conditions(const std::string& m, const std::string& n) {
    pp::MnParams mn{pp::parse_int(m), pp::parse_int(n)};
    pp::ConditionReport d1 = pp::degree1_conditions(mn);
    pp::ConditionReport d2 = pp::degree2_conditions(mn);
    pp::Int mm = mn.m, nn = mn.n;

    std::cout << "degree 1 (curve A=" << d1.curve.A.get_str() << ", B="
              << d1.curve.B.get_str() << "):\n";
    std::cout << "  5m^2-n^2 = " << pp::Int(5 * mm * mm - nn * nn).get_str()
              << "  square: " << (d1.conditions[0] ? "yes" : "no") << "\n";
    std::cout << "  m^2+3mn+n^2 = " << pp::Int(mm * mm + 3 * mm * nn + nn * nn).get_str()
              << "  square: " << (d1.conditions[1] ? "yes" : "no") << "\n";
    for (const auto& cand : d1.points)
        std::cout << "  condition " << cand.condition << " point " << cand.point.str()
                  << "  (" << order_label(cand.order)
                  << (cand.order ? ", not certifiable" : ", certifiable generator") << ")\n";

    pp::Int m4 = mm * mm * mm * mm, n4 = nn * nn * nn * nn;
    pp::Int q[4] = {-m4 - 4 * mm * nn * nn * nn + n4, m4 + 4 * mm * mm * nn * nn - n4,
                    m4 - 2 * mm * mm * mm * nn + 2 * mm * mm * nn * nn +
                        2 * mm * nn * nn * nn + n4,
                    m4 - 2 * mm * mm * mm * nn - 2 * mm * mm * nn * nn -
                        2 * mm * nn * nn * nn + n4};
    static const char* names[4] = {"(i)   -m^4-4mn^3+n^4", "(ii)  m^4+4m^2n^2-n^4",
                                   "(iii) m^4-2m^3n+2m^2n^2+2mn^3+n^4",
                                   "(iv)  m^4-2m^3n-2m^2n^2-2mn^3+n^4"};
    std::cout << "degree 2 (curve A=" << d2.curve.A.get_str() << ", B="
              << d2.curve.B.get_str() << "):\n";
    for (int i = 0; i < 4; ++i)
        std::cout << "  " << names[i] << " = " << q[i].get_str() << "  square: "
                  << (d2.conditions[i] ? "yes" : "no") << "\n";
    for (const auto& cand : d2.points)
        std::cout << "  condition " << cand.condition << " point " << cand.point.str()
                  << "  (" << order_label(cand.order)
                  << (cand.order ? ", not certifiable" : ", certifiable generator") << ")\n";
    return 0;
}

int cmd_reproduce(const std::string& only, bool corrupt) {
    pp::Fixtures fx = pp::certified_fixtures();
    if (corrupt) fx.corrupt();
    std::vector<std::string> selected;
    if (only.empty())
        selected = pp::reproduce::keys();
    else
        selected.push_back(only);
    bool all_pass = true;
    for (const auto& key : selected) {
        pp::reproduce::ItemResult r = pp::reproduce::run_item(key, fx);
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.key << " (" << r.detail
                  << ")\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_scan(unsigned long m_max, const std::vector<unsigned long>& h_list,
             unsigned long max_w, const std::string& max_u, const std::string& output) {
    pp::SearchBound bound{max_w, pp::parse_int(max_u)};
    if (output.empty()) {
        pp::scan(m_max, h_list, bound, std::cout);
        return 0;
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    unsigned long n = pp::scan(m_max, h_list, bound, out);
    std::cerr << n << " records written to " << output << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of pythapotent pythagorean pairs"};
    app.require_subcommand(1);

    std::string a, b, m, n, max_u = "1000000", only, output;
    unsigned long h = 1, max_w = 4, m_max = 2;
    unsigned count = 1;
    bool corrupt = false;
    std::vector<std::string> point;
    std::vector<unsigned long> h_list;

    auto* check = app.add_subcommand("check", "test whether (a,b) is a pythagorean pair");
    check->add_option("a", a)->required();
    check->add_option("b", b)->required();

    auto* curve = app.add_subcommand("curve", "print the degree-h curve and its torsion");
    curve->add_option("a", a)->required();
    curve->add_option("b", b)->required();
    curve->add_option("degree", h)->required();

    auto* derive = app.add_subcommand("derive", "derive a witness pair from a curve point");
    derive->add_option("a", a)->required();
    derive->add_option("b", b)->required();
    derive->add_option("degree", h)->required();
    derive->add_option("--point", point, "point as two rationals: x y (num/den or num)")
        ->expected(2)
        ->required();

    auto* search = app.add_subcommand("search", "bounded search for a certifying generator");
    search->add_option("a", a)->required();
    search->add_option("b", b)->required();
    search->add_option("degree", h)->required();
    search->add_option("--max-w", max_w, "denominator parameter bound");
    search->add_option("--max-u", max_u, "numerator magnitude bound");
    search->add_option("--count", count, "derive this many witnesses on success");

    auto* cubic = app.add_subcommand("cubic", "closed-form degree-3 certification for (m,n)");
    cubic->add_option("m", m)->required();
    cubic->add_option("n", n)->required();

    auto* conditions =
        app.add_subcommand("conditions", "degree-1/degree-2 square-condition report for (m,n)");
    conditions->add_option("m", m)->required();
    conditions->add_option("n", n)->required();

    auto* reproduce = app.add_subcommand("reproduce", "run the built-in verification suite");
    reproduce->add_option("--only", only, "run a single item");
    reproduce->add_flag("--corrupt", corrupt)->group("");  // negative-control hook, hidden

    auto* scan = app.add_subcommand("scan", "stream verdict records over primitive (m,n)");
    scan->add_option("--m-max", m_max, "largest m in the (m,n) grid")->required();
    scan->add_option("--h-list", h_list, "degrees to scan")->required()->delimiter(',');
    scan->add_option("--max-w", max_w, "denominator parameter bound");
    scan->add_option("--max-u", max_u, "numerator magnitude bound");
    scan->add_option("--output", output, "write records to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(a, b);
        if (app.got_subcommand(curve)) return cmd_curve(a, b, h);
        if (app.got_subcommand(derive)) return cmd_derive(a, b, h, point);
        if (app.got_subcommand(search)) return cmd_search(a, b, h, max_w, max_u, count);
        if (app.got_subcommand(cubic)) return cmd_cubic(m, n);
        if (app.got_subcommand(conditions)) return cmd_conditions(m, n);
        if (app.got_subcommand(reproduce)) return cmd_reproduce(only, corrupt);
        if (app.got_subcommand(scan)) return cmd_scan(m_max, h_list, max_w, max_u, output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cout << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
