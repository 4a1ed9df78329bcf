#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "motive/expr.hpp"
#include "motive/motive_expr.hpp"
#include "motive/sb2.hpp"

namespace {

using namespace motive;

int max_rank() {
    const char* raw = std::getenv("MOTIVE_WORKBENCH_MAX_RANK");
    if (!raw) return 8;
    const int v = std::atoi(raw);
    return v >= 1 ? v : 8;
}

void check_rank_cap(int n, const char* what) {
    if (n > max_rank())
        fail("DomainError", std::string(what) + " exceeds MOTIVE_WORKBENCH_MAX_RANK = " +
                                std::to_string(max_rank()));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (item.empty()) fail("DomainError", "empty entry in list '" + text + "'");
        out.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct HasseEdge {
    std::string from, to;
};

int run_ring(int d, int n, bool hasse, const std::string& format) {
    check_rank_cap(n, "ambient rank");
    const GrassmannSpace space(d, n);
    const auto basis = space.basis();

    std::vector<HasseEdge> edges;
    if (hasse) {
        for (const Partition& lambda : basis)
            for (const Partition& mu : basis)
                if (mu.weight() == lambda.weight() + 1 && mu.contains(lambda))
                    edges.push_back({basis_class_name(space, lambda), basis_class_name(space, mu)});
    }

    if (format == "json") {
        nlohmann::json j;
        j["space"] = space.to_json();
        j["dimension"] = space.dimension();
        nlohmann::json arr = nlohmann::json::array();
        for (const Partition& lambda : basis)
            arr.push_back({{"partition", lambda.to_json()},
                           {"codim", lambda.weight()},
                           {"name", basis_class_name(space, lambda)}});
        j["basis"] = arr;
        if (hasse) {
            nlohmann::json earr = nlohmann::json::array();
            for (const auto& e : edges) earr.push_back({e.from, e.to});
            j["hasse_edges"] = earr;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << space.to_string() << ": dimension " << space.dimension() << ", basis "
              << basis.size() << " Schubert classes\n";
    for (int codim = 0; codim <= space.dimension(); ++codim) {
        std::string line;
        for (const Partition& lambda : basis)
            if (lambda.weight() == codim) line += (line.empty() ? "" : "  ") + basis_class_name(space, lambda);
        std::cout << "codim " << codim << ": " << line << "\n";
    }
    if (hasse) {
        std::cout << "covering relations:\n";
        for (const auto& e : edges) std::cout << "  " << e.from << " -- " << e.to << "\n";
    }
    return 0;
}

int run_mult(const std::string& input, const std::string& space_arg, const std::string& ring_arg,
             const std::string& format) {
    const std::vector<int> dn = parse_int_list(space_arg);
    if (dn.size() != 2) fail("DomainError", "--space needs d,n");
    check_rank_cap(dn[1], "ambient rank");
    EvalContext ctx{GrassmannSpace(dn[0], dn[1]), GrassmannSpace(1, dn[1]),
                    CoefficientRing::from_string(ring_arg)};
    const CycleExpr ast = CycleExpr::parse(input);
    const EvalValue value = eval(ast, ctx);
    if (format == "json") {
        nlohmann::json j;
        j["input"] = input;
        j["ast"] = ast.render();
        j["value"] = value_to_json(value);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << value_to_string(value) << "\n";
    }
    return 0;
}

FlagDescriptor make_flag(const std::string& series, int rank, const std::string& index,
                         const std::string& flag_arg) {
    check_rank_cap(rank, "rank");
    GroupDescriptor group(series_from_string(series), rank, Int(index));
    return FlagDescriptor(group, parse_int_list(flag_arg));
}

int run_decompose(const std::string& series, int rank, const std::string& index,
                  const std::string& flag_arg, const std::string& remove_arg,
                  const std::string& format) {
    const FlagDescriptor flag = make_flag(series, rank, index, flag_arg);
    const std::vector<int> removals = parse_int_list(remove_arg);
    try {
        const MotiveExpr expr = decompose_chain(flag, removals);
        if (format == "json") {
            nlohmann::json j;
            j["flag"] = flag.to_string();
            j["removed"] = removals;
            j["decomposition"] = expr.to_json();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << expr.render() << "\n";
        }
        return 0;
    } catch (const ChainStepError& e) {
        if (e.code() == "GcdConditionFailed" && flag.dims().size() == 2 && flag.dims()[0] == 1) {
            const nlohmann::json guard = gcd_guard_report(flag.group().algebra_index, flag.dims()[1]);
            if (format == "json")
                std::cout << nlohmann::json{{"error", e.code()}, {"message", e.what()},
                                            {"guard_report", guard}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "rewrite rejected: " << e.what() << "\n"
                          << guard.at("explanation").get<std::string>() << "\n";
            return 1;
        }
        std::cout << "rewrite rejected [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
}

int run_poincare(const std::string& series, int rank, const std::string& index,
                 const std::string& flag_arg, const std::string& remove_arg,
                 const std::string& format) {
    const FlagDescriptor flag = make_flag(series, rank, index, flag_arg);
    const std::vector<int> removals = remove_arg.empty() ? std::vector<int>{} : parse_int_list(remove_arg);
    const MotiveExpr expr = decompose_chain(flag, removals);
    const PoincareTable table = PoincareTable::defaults_for(flag.group());
    const IntPolynomial p = poincare_polynomial(expr, table);

    nlohmann::json j;
    j["flag"] = flag.to_string();
    j["decomposition"] = expr.render();
    j["poincare"] = p.to_json();
    std::string split_note;
    if (flag.group().series == Series::A) {
        const IntPolynomial direct = flag_poincare_split(flag);
        j["split_flag_poincare"] = direct.to_json();
        j["matches_split_form"] = direct == p;
        split_note = std::string("split-form polynomial match: ") + (direct == p ? "yes" : "NO");
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << expr.render() << "\n" << p.to_string() << "\n";
        if (!split_note.empty()) std::cout << split_note << "\n";
    }
    return 0;
}

int run_verify(const std::string& target, const std::string& modulus, std::uint64_t seed,
               const std::string& format) {
    if (target != "sb2") fail("DomainError", "unknown verification target '" + target + "'");
    Sb2Options options;
    options.delta_modulus = Int(modulus);
    options.seed = seed;
    const VerificationReport report = run_all(options);
    if (format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.all_pass() ? 0 : 1;
}

int run_report(int rank, const std::string& index, const std::string& format) {
    check_rank_cap(rank, "rank");
    const KrullSchmidtReport report = krull_schmidt_report(rank, Int(index));
    if (format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schubert calculus, correspondence algebra, and motivic decompositions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    std::string ring = "Z";
    app.add_option("--ring", ring, "coefficient ring: Z, Z/m, or Q");
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for the randomized property checks");

    auto* ring_cmd = app.add_subcommand("ring", "print the Schubert basis of a Grassmannian");
    std::string kind = "gr";
    int ring_d = 2, ring_n = 5;
    bool hasse = false;
    ring_cmd->add_option("kind", kind)->check(CLI::IsMember({"gr"}));
    ring_cmd->add_option("d", ring_d, "subspace rank")->required();
    ring_cmd->add_option("n", ring_n, "ambient rank")->required();
    ring_cmd->add_flag("--hasse", hasse, "print the Hasse diagram covering relations");

    auto* mult_cmd = app.add_subcommand("mult", "evaluate a cycle expression");
    std::string expression, space_arg = "2,5";
    mult_cmd->add_option("expression", expression)->required();
    mult_cmd->add_option("--space", space_arg, "primary space d,n (projective factor is Gr(1,n))");

    auto* dec_cmd = app.add_subcommand("decompose", "apply motivic rewrite rules to a flag");
    std::string series = "A", index = "1", flag_arg, remove_arg;
    int rank = 1;
    dec_cmd->add_option("--series", series)->check(CLI::IsMember({"A", "B", "C", "F4", "G2"}))->required();
    dec_cmd->add_option("--rank", rank)->required();
    dec_cmd->add_option("--index", index, "algebra index ind(A), series A/C");
    dec_cmd->add_option("--flag", flag_arg, "flag dimensions d1,d2,...")->required();
    dec_cmd->add_option("--remove", remove_arg, "dimension values to remove, in order")->required();

    auto* poin_cmd = app.add_subcommand("poincare", "Poincare polynomial of a decomposition");
    std::string p_series = "A", p_index = "1", p_flag, p_remove;
    int p_rank = 1;
    poin_cmd->add_option("--series", p_series)->check(CLI::IsMember({"A", "B", "C", "F4", "G2"}))->required();
    poin_cmd->add_option("--rank", p_rank)->required();
    poin_cmd->add_option("--index", p_index, "algebra index ind(A), series A/C");
    poin_cmd->add_option("--flag", p_flag, "flag dimensions d1,d2,...")->required();
    poin_cmd->add_option("--remove", p_remove, "dimension values to remove, in order");

    auto* verify_cmd = app.add_subcommand("verify", "run the machine verification suite");
    std::string target = "sb2", modulus = "5";
    verify_cmd->add_option("target", target);
    verify_cmd->add_option("--modulus", modulus, "modulus for the diagonal identity (default 5)");

    auto* report_cmd = app.add_subcommand("report", "Krull-Schmidt failure report");
    int r_rank = 4;
    std::string r_index = "5";
    report_cmd->add_option("--rank", r_rank, "group rank n (algebra degree n+1)");
    report_cmd->add_option("--index", r_index, "algebra index ind(A)");

    try {
        app.parse(argc, argv);
        if (ring_cmd->parsed()) return run_ring(ring_d, ring_n, hasse, format);
        if (mult_cmd->parsed()) return run_mult(expression, space_arg, ring, format);
        if (dec_cmd->parsed()) return run_decompose(series, rank, index, flag_arg, remove_arg, format);
        if (poin_cmd->parsed()) return run_poincare(p_series, p_rank, p_index, p_flag, p_remove, format);
        if (verify_cmd->parsed()) return run_verify(target, modulus, seed, format);
        if (report_cmd->parsed()) return run_report(r_rank, r_index, format);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const motive::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const motive::TypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
        return 2;
    } catch (const motive::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    }
}
