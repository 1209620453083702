// Command-line census and verification tool for special 2-fold coverings
// of circle bundles over surfaces.  Every command emits one document on
// stdout (json is the machine contract, table is for reading); identical
// inputs produce byte-identical documents.  Timing goes to stderr.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spincover/spincover.hpp"

using nlohmann::json;
using namespace spincover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitBadInput;
}

json bit_matrix_json(const BitMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.to_strings())
        rows.push_back(r);
    return rows;
}

json ring_matrix_json(const GroupRingMatrix2& m) {
    json rows = json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.cols(); ++j)
            row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

json ring_matrix_json(const GroupRingMatrixZ& m) {
    json rows = json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.cols(); ++j)
            row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

// Rows are either bit strings ("0101") or arrays of entry strings.
void print_aligned(std::ostream& os, const json& matrix_rows) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> widths;
    for (const auto& row : matrix_rows) {
        std::vector<std::string> line;
        if (row.is_string()) {
            for (char ch : row.get<std::string>())
                line.emplace_back(1, ch);
        } else {
            for (const auto& entry : row)
                line.push_back(entry.is_string() ? entry.get<std::string>() : entry.dump());
        }
        for (std::size_t j = 0; j < line.size(); ++j) {
            if (widths.size() <= j)
                widths.push_back(0);
            widths[j] = std::max(widths[j], line[j].size());
        }
        cells.push_back(std::move(line));
    }
    for (const auto& line : cells) {
        os << "  [";
        for (std::size_t j = 0; j < line.size(); ++j)
            os << " " << line[j] << std::string(widths[j] - line[j].size(), ' ');
        os << " ]\n";
    }
}

struct OutputOptions {
    std::string format = "table";
};

void emit(const json& document, const OutputOptions& opts) {
    if (opts.format == "json") {
        std::cout << document.dump(2) << "\n";
        return;
    }
    // Table rendering dispatches on the command name.
    const std::string command = document.at("command");
    const json& results = document.at("results");
    std::ostringstream head;
    head << command;
    for (const auto& [key, value] : document.at("parameters").items())
        head << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    std::cout << head.str() << "\n";

    if (command == "orbits") {
        auto print_orbit = [](const json& orbit, const std::string& label) {
            std::cout << label << " orbit (" << orbit.at("size").get<std::size_t>() << "):";
            for (const auto& e : orbit.at("elements"))
                std::cout << " " << e.get<std::string>();
            std::cout << "\n";
        };
        print_orbit(results.at("arf_zero"), "arf 0");
        print_orbit(results.at("arf_one"), "arf 1");
        std::cout << "group action cross-check: "
                  << (results.at("cross_checked").get<bool>() ? "ok" : "skipped (genus > 2)")
                  << "\n";
    } else if (command == "fox") {
        for (const std::string view : {"integral", "mod2", "vq"}) {
            if (!results.contains(view))
                continue;
            std::cout << view << ":\n";
            print_aligned(std::cout, results.at(view));
        }
        if (results.contains("module"))
            std::cout << "module: integral "
                      << results.at("module").at("integral").get<std::string>() << ", mod 2 "
                      << results.at("module").at("mod2").get<std::string>() << "\n";
    } else if (command == "congruent") {
        if (results.at("congruent").get<bool>()) {
            std::cout << "congruent: yes\n";
            std::cout << "witness a:\n";
            print_aligned(std::cout, results.at("witness").at("a"));
            std::cout << "witness theta:\n";
            print_aligned(std::cout, results.at("witness").at("theta").at("matrix"));
            std::cout << "diagram verified: "
                      << (results.at("diagram_verified").get<bool>() ? "yes" : "no") << "\n";
        } else {
            std::cout << "congruent: no (arf " << results.at("arf").at(0).get<int>() << " vs "
                      << results.at("arf").at(1).get<int>() << ")\n";
        }
    } else if (command == "sp") {
        for (const std::string name : {"sp", "sp0", "sp1"}) {
            const json& group = results.at(name);
            std::cout << name << ": order " << group.at("order").get<std::size_t>() << ", "
                      << group.at("generators").size() << " generators\n";
            std::size_t index = 0;
            for (const auto& gen : group.at("generators")) {
                std::cout << "  generator " << ++index << ":\n";
                print_aligned(std::cout, gen);
            }
        }
    } else if (command == "witness") {
        std::cout << "fixes a form of arf " << results.at("which").get<int>() << "\n";
        std::cout << "transvection direction y = " << results.at("y").get<std::string>() << "\n";
        std::cout << "conjugate fixes reference form: "
                  << (results.at("certified").get<bool>() ? "yes" : "no") << "\n";
    } else if (command == "verify") {
        for (const auto& check : results.at("checks"))
            std::cout << (check.at("pass").get<bool>() ? "pass" : "FAIL") << "  "
                      << check.at("name").get<std::string>() << "  ["
                      << check.at("detail").get<std::string>() << "]\n";
        std::cout << results.at("passed").get<std::size_t>() << " passed, "
                  << results.at("failed").get<std::size_t>() << " failed\n";
    }
}

bool parse_genus_range(const std::string& text, int& g_min, int& g_max) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            g_min = g_max = std::stoi(text);
        } else {
            g_min = std::stoi(text.substr(0, dots));
            g_max = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return g_min >= 1 && g_max <= 3 && g_min <= g_max;
}

int run_orbits(int g, long long q, const std::string& section_bits, bool johnson,
               const OutputOptions& opts) {
    if (g < 1 || g > 3)
        return fail_input("genus must be between 1 and 3");
    if (q % 2 != 0)
        return fail_input("Chern class must be even");
    QuadraticSection s = QuadraticSection::zero(g);
    if (johnson)
        s = QuadraticSection::johnson(g);
    else if (!section_bits.empty()) {
        if (static_cast<int>(section_bits.size()) != 2 * g)
            return fail_input("section bits must have length 2g");
        s = QuadraticSection(g, BitVector::from_string(section_bits));
    }

    const OrbitPartition part = orbits(g, q, s);
    auto orbit_json = [](const std::vector<SpecialCovering>& orbit) {
        json elements = json::array();
        for (const auto& phi : orbit)
            elements.push_back(phi.bits().to_string());
        return json{{"size", orbit.size()}, {"elements", elements}};
    };
    json document{{"command", "orbits"},
                  {"parameters",
                   {{"genus", g}, {"chern", q}, {"section", s.r().to_string()}}},
                  {"results",
                   {{"arf_zero", orbit_json(part.arf_zero)},
                    {"arf_one", orbit_json(part.arf_one)},
                    {"cross_checked", g <= 2}}}};
    emit(document, opts);
    return kExitOk;
}

int run_fox(int g, long long q, const std::string& bits, bool integral, bool mod2, bool vq,
            const OutputOptions& opts) {
    if (g < 1 || g > 3)
        return fail_input("genus must be between 1 and 3");
    if (q % 2 != 0)
        return fail_input("Chern class must be even");
    if (static_cast<int>(bits.size()) != 2 * g)
        return fail_input("covering bits must have length 2g");
    if (!integral && !mod2 && !vq)
        mod2 = true;

    const SpecialCovering phi = SpecialCovering::from_string(g, q, bits);
    json views = json::array();
    json results = json::object();
    if (integral) {
        views.push_back("integral");
        results["integral"] = ring_matrix_json(derived_matrix(phi));
    }
    if (mod2) {
        views.push_back("mod2");
        results["mod2"] = ring_matrix_json(derived_matrix_mod2(phi));
    }
    if (vq) {
        views.push_back("vq");
        results["vq"] = ring_matrix_json(vq_normal_form(phi));
        const ModuleDescriptor d = module_structure(phi);
        json torsion = json::array();
        for (long long t : d.torsion)
            torsion.push_back(t);
        results["module"] = {{"integral", d.integral_string()},
                             {"mod2", d.mod2_string()},
                             {"free_rank", d.free_rank},
                             {"torsion", torsion},
                             {"z2_summands", d.z2_summands},
                             {"group_ring_summands", d.group_ring_summands}};
    }
    json document{{"command", "fox"},
                  {"parameters",
                   {{"genus", g}, {"chern", q}, {"covering", bits}, {"views", views}}},
                  {"results", results}};
    emit(document, opts);
    return kExitOk;
}

int run_congruent(int g, long long q, const std::string& bits, const std::string& bits2,
                  const std::string& section_bits, bool johnson, const OutputOptions& opts) {
    if (g < 1 || g > 3)
        return fail_input("genus must be between 1 and 3");
    if (q % 2 != 0)
        return fail_input("Chern class must be even");
    if (static_cast<int>(bits.size()) != 2 * g || static_cast<int>(bits2.size()) != 2 * g)
        return fail_input("covering bits must have length 2g");
    QuadraticSection s = QuadraticSection::zero(g);
    if (johnson)
        s = QuadraticSection::johnson(g);
    else if (!section_bits.empty()) {
        if (static_cast<int>(section_bits.size()) != 2 * g)
            return fail_input("section bits must have length 2g");
        s = QuadraticSection(g, BitVector::from_string(section_bits));
    }

    const SpecialCovering phi = SpecialCovering::from_string(g, q, bits);
    const SpecialCovering phi2 = SpecialCovering::from_string(g, q, bits2);
    const auto witness = congruent(phi, phi2, s);

    json results;
    if (witness) {
        const ThetaParams& theta = witness->theta;
        results = {{"congruent", true},
                   {"witness",
                    {{"a", bit_matrix_json(witness->a.matrix())},
                     {"theta",
                      {{"b1", bit_matrix_json(theta.b1)},
                       {"b2", theta.b2_col.to_string()},
                       {"b3", theta.b3_row.to_string()},
                       {"b", theta.b ? 1 : 0},
                       {"matrix", ring_matrix_json(theta.matrix())}}}}},
                   {"diagram_verified", diagram_commutes(witness->a, theta, phi, phi2, s)}};
    } else {
        results = {{"congruent", false},
                   {"arf",
                    {arf(omega_of(phi, s)) ? 1 : 0, arf(omega_of(phi2, s)) ? 1 : 0}}};
    }
    json document{{"command", "congruent"},
                  {"parameters",
                   {{"genus", g},
                    {"chern", q},
                    {"covering", bits},
                    {"covering2", bits2},
                    {"section", s.r().to_string()}}},
                  {"results", results}};
    emit(document, opts);
    return kExitOk;
}

int run_sp(int g, const OutputOptions& opts) {
    if (g < 1 || g > 3)
        return fail_input("genus must be between 1 and 3");
    auto group_json = [g](const std::vector<SymplecticMatrix>& gens) {
        json gen_list = json::array();
        for (const auto& a : gens)
            gen_list.push_back(bit_matrix_json(a.matrix()));
        return json{{"order", group_closure_order(g, gens)}, {"generators", gen_list}};
    };
    std::vector<SymplecticMatrix> sp_gens = sp_generators(0, g);
    sp_gens.push_back(shear_generator(g));
    json document{{"command", "sp"},
                  {"parameters", {{"genus", g}}},
                  {"results",
                   {{"sp", group_json(sp_gens)},
                    {"sp0", group_json(sp_generators(0, g))},
                    {"sp1", group_json(sp_generators(1, g))}}}};
    emit(document, opts);
    return kExitOk;
}

int run_witness(int g, const std::string& matrix_bits, const OutputOptions& opts) {
    if (g < 1 || g > 3)
        return fail_input("genus must be between 1 and 3");
    const int n = 2 * g;
    if (static_cast<int>(matrix_bits.size()) != n * n)
        return fail_input("matrix must be given as 2g x 2g bits, row-major");
    BitMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const char ch = matrix_bits[static_cast<std::size_t>((i - 1) * n + (j - 1))];
            if (ch != '0' && ch != '1')
                return fail_input("matrix bits may contain only 0 and 1");
            m.set(i, j, ch == '1');
        }
    if (!is_symplectic(m))
        return fail_input("matrix does not preserve the pairing");

    const SymplecticMatrix a(m);
    const CoverWitness w = cover_witness(a);
    const SymplecticMatrix t = transvection(w.y);
    json document{{"command", "witness"},
                  {"parameters", {{"genus", g}, {"matrix", matrix_bits}}},
                  {"results",
                   {{"which", w.which},
                    {"y", w.y.to_string()},
                    {"certified", membership(t * a * t, w.which)}}}};
    emit(document, opts);
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& g_range, bool parallel,
               const OutputOptions& opts) {
    bool known = false;
    for (const auto& name : verify_suite_names())
        if (name == suite)
            known = true;
    if (!known)
        return fail_input("unknown suite '" + suite + "'");
    int g_min = 1, g_max = 2;
    if (!g_range.empty() && !parse_genus_range(g_range, g_min, g_max))
        return fail_input("genus range must look like '1..2' or '2' within 1..3");

    const auto checks = verify_suite(suite, g_min, g_max, parallel);
    json check_list = json::array();
    std::size_t failed = 0;
    std::string first_failure;
    for (const auto& c : checks) {
        check_list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (!c.pass) {
            ++failed;
            if (first_failure.empty())
                first_failure = c.name + ": " + c.detail;
        }
    }
    json document{{"command", "verify"},
                  {"parameters",
                   {{"suite", suite},
                    {"genus_min", g_min},
                    {"genus_max", g_max}}},
                  {"results",
                   {{"checks", check_list},
                    {"passed", checks.size() - failed},
                    {"failed", failed}}}};
    emit(document, opts);
    if (failed > 0) {
        std::cerr << "first counterexample: " << first_failure << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"census, matrices and verification for special 2-fold coverings "
                 "of circle bundles over surfaces"};
    app.require_subcommand(1);

    OutputOptions opts;
    int g = 1;
    long long q = 2;
    std::string section_bits, covering_bits, covering_bits2, matrix_bits;
    std::string suite = "all", g_range;
    bool johnson = false, integral = false, mod2 = false, vq = false, parallel = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* orbits_cmd = app.add_subcommand("orbits", "orbit census of the coverings");
    orbits_cmd->add_option("-g,--genus", g, "genus of the base surface")->required();
    orbits_cmd->add_option("-q,--chern", q, "Chern class of the bundle")->required();
    auto* orbits_section = orbits_cmd->add_option("--section", section_bits, "section bits r_1..r_2g");
    orbits_cmd->add_flag("--johnson", johnson, "all-ones section")->excludes(orbits_section);
    add_format(orbits_cmd);

    CLI::App* fox_cmd = app.add_subcommand("fox", "derived matrices of a covering");
    fox_cmd->add_option("-g,--genus", g, "genus of the base surface")->required();
    fox_cmd->add_option("-q,--chern", q, "Chern class of the bundle")->required();
    fox_cmd->add_option("covering", covering_bits, "monodromy bits n_1..n_2g")->required();
    fox_cmd->add_flag("--integral", integral, "matrix over Z[t]/(1-t^2)");
    fox_cmd->add_flag("--mod2", mod2, "matrix over Z2[t]/(1-t^2)");
    fox_cmd->add_flag("--vq", vq, "normal form in the (Q,V) bases plus module structure");
    add_format(fox_cmd);

    CLI::App* congruent_cmd =
        app.add_subcommand("congruent", "congruence witness for two coverings");
    congruent_cmd->add_option("-g,--genus", g, "genus of the base surface")->required();
    congruent_cmd->add_option("-q,--chern", q, "Chern class of the bundle")->required();
    congruent_cmd->add_option("covering", covering_bits, "first monodromy bits")->required();
    congruent_cmd->add_option("covering2", covering_bits2, "second monodromy bits")->required();
    auto* congruent_section =
        congruent_cmd->add_option("--section", section_bits, "section bits r_1..r_2g");
    congruent_cmd->add_flag("--johnson", johnson, "all-ones section")->excludes(congruent_section);
    add_format(congruent_cmd);

    CLI::App* sp_cmd = app.add_subcommand("sp", "orders and generators of Sp, Sp0, Sp1");
    sp_cmd->add_option("-g,--genus", g, "genus of the base surface")->required();
    add_format(sp_cmd);

    CLI::App* witness_cmd =
        app.add_subcommand("witness", "conjugacy-covering certificate for a matrix");
    witness_cmd->add_option("-g,--genus", g, "genus of the base surface")->required();
    witness_cmd->add_option("matrix", matrix_bits, "2g x 2g bits, row-major")->required();
    add_format(witness_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->add_option("suite", suite, "arf|orbits|generators|cover|fox|congruence|star|all")
        ->required();
    verify_cmd->add_option("--g,--genus", g_range, "genus range, e.g. 1..2");
    verify_cmd->add_flag("--parallel", parallel, "run suite parts concurrently");
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help and friends
            return app.exit(e);
        app.exit(e);
        return kExitBadInput;
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = kExitBadInput;
    try {
        if (orbits_cmd->parsed())
            rc = run_orbits(g, q, section_bits, johnson, opts);
        else if (fox_cmd->parsed())
            rc = run_fox(g, q, covering_bits, integral, mod2, vq, opts);
        else if (congruent_cmd->parsed())
            rc = run_congruent(g, q, covering_bits, covering_bits2, section_bits, johnson, opts);
        else if (sp_cmd->parsed())
            rc = run_sp(g, opts);
        else if (witness_cmd->parsed())
            rc = run_witness(g, matrix_bits, opts);
        else if (verify_cmd->parsed())
            rc = run_verify(suite, g_range, parallel, opts);
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what());
    } catch (const std::length_error& e) {
        return fail_input(e.what());
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    return rc;
}
