#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diagsemi/bipartition.hpp"
#include "diagsemi/counting.hpp"
#include "diagsemi/enumerate.hpp"
#include "diagsemi/errors.hpp"
#include "diagsemi/families.hpp"
#include "diagsemi/greens.hpp"
#include "diagsemi/tables.hpp"
#include "diagsemi/words.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace diagsemi;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file)
                throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

Bipartition parse_arg(const std::string& text, int k, bool has_k) {
    Bipartition a = from_text(text);
    if (has_k && a.degree() != k)
        throw DegreeMismatch("bipartition has degree " +
                             std::to_string(a.degree()) + ", expected " +
                             std::to_string(k));
    return a;
}

void print_bipartition(const Bipartition& a, const std::string& format) {
    if (format == "json")
        std::cout << to_json(a) << '\n';
    else
        std::cout << to_text(a) << '\n';
}

GreensRelation parse_relation(const std::string& s) {
    if (s == "r") return GreensRelation::R;
    if (s == "l") return GreensRelation::L;
    if (s == "h") return GreensRelation::H;
    if (s == "d") return GreensRelation::D;
    if (s == "j") return GreensRelation::J;
    throw UsageError("unknown relation: " + s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read fixture: " + path);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bipartition algebra for diagram monoids"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("DIAGSEMI_FORMAT");

    int k = 0;
    std::string arg_a, arg_b, family_str, out_path;

    auto* cmd_product = app.add_subcommand("product", "multiply bipartitions");
    auto* prod_k = cmd_product->add_option("-k", k, "expected degree");
    cmd_product->add_option("a", arg_a)->required();
    cmd_product->add_option("b", arg_b)->required();

    auto* cmd_star = app.add_subcommand("star", "vertical flip");
    auto* star_k = cmd_star->add_option("-k", k, "expected degree");
    cmd_star->add_option("a", arg_a)->required();

    auto* cmd_hsum = app.add_subcommand("hsum", "horizontal sum");
    auto* hsum_k = cmd_hsum->add_option("-k", k, "expected degree");
    cmd_hsum->add_option("a", arg_a)->required();
    cmd_hsum->add_option("b", arg_b)->required();

    auto* cmd_member = app.add_subcommand("member", "test family membership");
    cmd_member->add_option("--family", family_str)->required();
    auto* member_k = cmd_member->add_option("-k", k, "expected degree");
    cmd_member->add_option("a", arg_a)->required();

    std::size_t max_elements = kDefaultMaxElements;
    int max_bell_degree = 5;
    auto* cmd_enum = app.add_subcommand("enumerate", "list family elements");
    cmd_enum->add_option("--family", family_str)->required();
    cmd_enum->add_option("-k", k)->required();
    cmd_enum->add_option("--out", out_path);
    cmd_enum->add_option("--max-elements", max_elements);
    cmd_enum->add_option("--max-bell-degree", max_bell_degree);

    std::string relation_str = "d", method = "pattern";
    auto* cmd_greens = app.add_subcommand("greens", "Green's relation classes");
    cmd_greens->add_option("--family", family_str)->required();
    cmd_greens->add_option("-k", k)->required();
    cmd_greens->add_option("--relation", relation_str)
        ->check(CLI::IsMember({"r", "l", "h", "d", "j"}));
    cmd_greens->add_option("--method", method)
        ->check(CLI::IsMember({"pattern", "ideal"}));
    cmd_greens->add_option("--out", out_path);
    cmd_greens->add_option("--max-elements", max_elements);

    std::string what;
    int m = 0, k2 = 0;
    long tvert = 0;
    auto* cmd_count = app.add_subcommand("count", "closed-form cardinalities");
    cmd_count->add_option("--what", what)
        ->required()
        ->check(CLI::IsMember({"pm", "mod", "apsis", "xapsis", "pt", "pn",
                               "xt", "xn", "dclasses", "rclasses"}));
    auto* count_m = cmd_count->add_option("--m", m);
    cmd_count->add_option("-k", k)->required();
    auto* count_k2 = cmd_count->add_option("--k2", k2);
    auto* count_t = cmd_count->add_option("--t", tvert);
    auto* count_family = cmd_count->add_option("--family", family_str);

    std::string reproduce, fixtures_dir = "fixtures", out_dir;
    auto* cmd_tables = app.add_subcommand("tables", "reproduce shipped tables");
    cmd_tables->add_option("--reproduce", reproduce)->required();
    cmd_tables->add_option("--fixtures", fixtures_dir);
    cmd_tables->add_option("--out", out_dir);

    std::string order_str = "diapsis-first";
    int word_cap = 6;
    auto* cmd_nf = app.add_subcommand("normal-forms", "geodesic words");
    cmd_nf->add_option("--m", m)->required();
    cmd_nf->add_option("-k", k)->required();
    cmd_nf->add_option("--order", order_str)
        ->check(CLI::IsMember({"diapsis-first", "transapsis-first"}));
    cmd_nf->add_option("--out", out_path);
    cmd_nf->add_option("--word-cap", word_cap);

    std::string rel_name;
    int cap = 14;
    auto* cmd_pc = app.add_subcommand("presentation-check",
                                      "soundness and bounded congruence");
    cmd_pc->add_option("--name", rel_name)->required();
    cmd_pc->add_option("-k", k)->required();
    auto* pc_m = cmd_pc->add_option("--m", m);
    cmd_pc->add_option("--cap", cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_product->parsed()) {
            Bipartition a = parse_arg(arg_a, k, prod_k->count() > 0);
            Bipartition b = parse_arg(arg_b, k, prod_k->count() > 0);
            print_bipartition(product(a, b), format);
        } else if (cmd_star->parsed()) {
            print_bipartition(star(parse_arg(arg_a, k, star_k->count() > 0)),
                              format);
        } else if (cmd_hsum->parsed()) {
            Bipartition a = parse_arg(arg_a, k, hsum_k->count() > 0);
            Bipartition b = parse_arg(arg_b, k, hsum_k->count() > 0);
            print_bipartition(hsum(a, b), format);
        } else if (cmd_member->parsed()) {
            Family fam = family_from_string(family_str);
            Bipartition a = parse_arg(arg_a, k, member_k->count() > 0);
            bool in = member(fam, a);
            if (format == "json")
                std::cout << json{{"member", in}} << '\n';
            else
                std::cout << (in ? "true" : "false") << '\n';
        } else if (cmd_enum->parsed()) {
            ElementSet S;
            if (family_str == "all") {
                S = all_bipartitions(k, max_bell_degree);
            } else {
                Family fam = family_from_string(family_str);
                S = close(k, generating_set(fam, k), max_elements);
            }
            Output out(out_path);
            for (const Bipartition& a : S.elements)
                out.stream() << to_json(a) << '\n';
            out.stream() << json{{"count", S.elements.size()}} << '\n';
        } else if (cmd_greens->parsed()) {
            Family fam = family_from_string(family_str);
            GreensRelation rel = parse_relation(relation_str);
            std::vector<Bipartition> gens = generating_set(fam, k);
            GreensPartition P;
            ElementSet S;
            if (method == "pattern") {
                S = close(k, gens, max_elements);
                P = classes_by_pattern(S, rel);
            } else {
                CayleyGraph C = cayley(k, gens, max_elements);
                P = classes_by_ideals(C, rel);
                S = std::move(C.elements);
            }
            Output out(out_path);
            if (format == "csv") {
                out.stream() << "size,rep\n";
                for (const auto& cls : P.classes)
                    out.stream() << cls.size() << ",\""
                                 << to_text(S.elements[cls[0]]) << "\"\n";
            } else if (format == "text") {
                out.stream() << "classes " << P.classes.size() << '\n';
                for (const auto& cls : P.classes)
                    out.stream() << cls.size() << '\t'
                                 << to_text(S.elements[cls[0]]) << '\n';
            } else {
                json classes = json::array();
                for (const auto& cls : P.classes)
                    classes.push_back({{"size", cls.size()},
                                       {"rep", to_text(S.elements[cls[0]])}});
                json doc{{"family", family_str},
                         {"k", k},
                         {"relation", relation_str},
                         {"method", method},
                         {"class_count", P.classes.size()},
                         {"classes", classes}};
                out.stream() << doc << '\n';
            }
        } else if (cmd_count->parsed()) {
            auto need = [&](const CLI::Option* opt, const char* flag) {
                if (opt->count() == 0)
                    throw UsageError("count --what " + what + " requires " +
                                     flag);
            };
            BigNat value;
            if (what == "pm" || what == "mod" || what == "apsis" ||
                what == "xapsis") {
                need(count_m, "--m");
                if (what == "pm") value = pm_card(m, k);
                else if (what == "mod") value = mod_card(m, k);
                else if (what == "apsis") value = apsis_card(m, k);
                else value = xapsis_card(m, k);
            } else if (what == "pt" || what == "xt") {
                need(count_m, "--m");
                need(count_k2, "--k2");
                value = what == "pt" ? pt(m, k, k2) : xt(m, k, k2);
            } else if (what == "pn" || what == "xn") {
                need(count_m, "--m");
                need(count_t, "--t");
                value = what == "pn" ? pn(m, k, tvert) : xn(m, k, tvert);
            } else {
                need(count_family, "--family");
                Family fam = family_from_string(family_str);
                value = what == "dclasses" ? count_d_classes(fam, k)
                                           : count_r_classes(fam, k);
            }
            if (format == "json")
                std::cout << json{{"what", what}, {"value", to_string(value)}}
                          << '\n';
            else
                std::cout << to_string(value) << '\n';
        } else if (cmd_tables->parsed()) {
            std::vector<std::string> names;
            if (reproduce == "all")
                names = table_names();
            else
                names.push_back(reproduce);
            bool any_diff = false;
            for (const std::string& name : names) {
                std::string rendered = render_table(name);
                if (!out_dir.empty()) {
                    std::ofstream f(out_dir + "/" + name + ".csv",
                                    std::ios::binary);
                    if (!f)
                        throw std::runtime_error("cannot write table: " + name);
                    f << rendered;
                } else {
                    std::cout << rendered;
                }
                std::string fixture =
                    read_file(fixtures_dir + "/" + name + ".csv");
                bool same = rendered == fixture;
                any_diff = any_diff || !same;
                std::cerr << (same ? "ok " : "DIFF ") << name << '\n';
            }
            return any_diff ? 1 : 0;
        } else if (cmd_nf->parsed()) {
            if (m != 2)
                throw UnsupportedRange(
                    "normal forms are implemented for m = 2 only");
            GenOrder order = order_str == "diapsis-first"
                                 ? GenOrder::DiapsisFirst
                                 : GenOrder::TransapsisFirst;
            auto words = geodesic_lex_words(k, order, word_cap);
            Output out(out_path);
            for (const auto& [elt, word] : words)
                out.stream() << to_text(elt) << '\t' << word_to_string(word)
                             << '\n';
        } else if (cmd_pc->parsed()) {
            int mm = pc_m->count() > 0 ? m : 2;
            RelationSet rs = relations(rel_name, k, mm);
            std::vector<Letter> alphabet = presentation_alphabet(rel_name, k, mm);
            SoundnessReport report = check_soundness(rs, k);
            CongruenceResult cong = congruence_size(alphabet, rs, k, cap);
            if (format == "json") {
                json doc{{"name", rel_name},
                         {"k", k},
                         {"m", rs.m},
                         {"relations", rs.pairs.size()},
                         {"sound", report.sound},
                         {"failing", report.failing},
                         {"class_count", cong.class_count},
                         {"stabilized", cong.stabilized}};
                std::cout << doc << '\n';
            } else {
                std::cout << "name " << rel_name << '\n'
                          << "k " << k << '\n'
                          << "m " << rs.m << '\n'
                          << "relations " << rs.pairs.size() << '\n'
                          << "sound " << (report.sound ? "true" : "false")
                          << '\n';
                if (!report.sound) {
                    std::cout << "failing";
                    for (int i : report.failing) std::cout << ' ' << i;
                    std::cout << '\n';
                }
                std::cout << "class_count " << cong.class_count << '\n'
                          << "stabilized "
                          << (cong.stabilized ? "true" : "false") << '\n';
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DiagError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
