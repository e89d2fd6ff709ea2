// balance-lab: decide balanceability / simple balanceability of graphs,
// construct and verify certificates, and generate hardness instances.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balance/balance_lab.hpp"

using nlohmann::json;

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitRejected = 1; // certificate verification mode only
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitDefect = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw balance::parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A file holds either a single graph6 line or an edge list (which starts
// with the vertex count; digits are not valid graph6 leading bytes).
balance::Graph parse_graph_text(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    if (i == text.size()) throw balance::parse_error("empty input");
    if (text[i] >= '0' && text[i] <= '9') return balance::parse_edge_list(text);
    std::string line = text.substr(i);
    if (auto nl = line.find('\n'); nl != std::string::npos) line.resize(nl);
    return balance::parse_graph6(line);
}

struct GraphInput {
    std::string graph6;
    std::string path;

    balance::Graph load() const {
        if (!graph6.empty()) return balance::parse_graph6(graph6);
        if (!path.empty()) return parse_graph_text(read_file(path));
        throw balance::parse_error("no input graph: use --graph6 or --input");
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "inline graph6 string");
        cmd->add_option("--input", path, "file with a graph6 line or an edge list");
    }
};

int oracle_cap_from_env() {
    if (const char* env = std::getenv("BALANCE_LAB_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return (int)v;
    }
    return balance::kDefaultOracleCap;
}

json verdict_to_json(const balance::Verdict& v, balance::BalanceProperty property) {
    json j;
    j["property"] = balance::to_string(property);
    j["status"] = balance::to_string(v.status);
    j["method"] = v.method;
    if (v.certificate) j["certificate"] = balance::certificate_to_json(*v.certificate);
    if (v.refutation) j["refutation"] = balance::to_string(*v.refutation);
    return j;
}

void print_verdict(const balance::Verdict& v, balance::BalanceProperty property, const std::string& format) {
    if (format == "json") {
        std::cout << verdict_to_json(v, property).dump() << "\n";
        return;
    }
    std::cout << "property: " << balance::to_string(property) << "\n";
    std::cout << "status: " << balance::to_string(v.status) << "\n";
    std::cout << "method: " << v.method << "\n";
    if (v.refutation) std::cout << "refutation: " << balance::to_string(*v.refutation) << "\n";
    if (v.certificate) std::cout << "certificate: " << balance::certificate_to_string(*v.certificate) << "\n";
}

balance::BalanceProperty parse_property(const std::string& name) {
    if (name == "balanceable") return balance::BalanceProperty::balanceable;
    if (name == "simply-balanceable") return balance::BalanceProperty::simply_balanceable;
    throw balance::parse_error("unknown property: " + name);
}

balance::DecideMethod parse_method(const std::string& name) {
    if (name == "auto") return balance::DecideMethod::automatic;
    if (name == "theorem") return balance::DecideMethod::theorem;
    if (name == "oracle") return balance::DecideMethod::oracle;
    throw balance::parse_error("unknown method: " + name);
}

int run_check(const GraphInput& input, const std::string& property_name, const std::string& method_name,
              int cap, const std::string& format, const std::string& certificate_path) {
    balance::Graph g = input.load();
    if (!certificate_path.empty()) {
        balance::BalanceCertificate cert =
            balance::certificate_from_string(read_file(certificate_path), g.vertex_count());
        balance::VerifyResult res = balance::verify_certificate(g, cert);
        if (format == "json") {
            json j;
            j["verified"] = res.ok;
            if (!res.ok) j["diagnostic"] = res.diagnostic;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "verified: " << (res.ok ? "true" : "false") << "\n";
            if (!res.ok) std::cout << "diagnostic: " << res.diagnostic << "\n";
        }
        return res.ok ? kExitDecided : kExitRejected;
    }
    balance::BalanceProperty property = parse_property(property_name);
    balance::Verdict v = balance::decide(g, property, parse_method(method_name), cap);
    print_verdict(v, property, format);
    return v.status == balance::VerdictStatus::undecided ? kExitUndecided : kExitDecided;
}

int run_certify(const GraphInput& input, const std::string& out_path, bool verify_back,
                const std::string& format) {
    balance::Graph g = input.load();
    balance::RegularityInfo reg = balance::regularity(g);
    balance::BalanceCertificate cert;
    std::string constructor;
    if (reg.regular && reg.k == 3) {
        cert = balance::cubic_balance_certificate(g);
        constructor = "cubic";
    } else if (reg.regular && reg.k == 4) {
        cert = balance::four_regular_certificate(g); // throws inapplicable on bad order
        constructor = "four-regular";
    } else {
        std::cerr << "certify: no constructor applies (graph is not cubic or 4-regular)\n";
        return kExitUndecided;
    }
    std::string text = balance::certificate_to_string(cert);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw balance::parse_error("cannot write file: " + out_path);
        out << text << "\n";
    }
    bool verified = true;
    if (verify_back) {
        std::string reread = out_path.empty() ? text : read_file(out_path);
        balance::BalanceCertificate again = balance::certificate_from_string(reread, g.vertex_count());
        verified = balance::verify_certificate(g, again).ok;
    }
    if (format == "json") {
        json j;
        j["constructor"] = constructor;
        j["certificate"] = balance::certificate_to_json(cert);
        if (verify_back) j["verified"] = verified;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "constructor: " << constructor << "\n";
        std::cout << "certificate: " << text << "\n";
        if (verify_back) std::cout << "verified: " << (verified ? "true" : "false") << "\n";
    }
    return verified ? kExitDecided : kExitDefect;
}

int run_reduce(const GraphInput& input, bool verify_equivalence, const std::string& out_path,
               const std::string& format) {
    balance::Graph g = input.load();
    balance::HardnessInstance inst = balance::hardness_instance(g);
    std::string g6 = balance::write_graph6(inst.graph);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw balance::parse_error("cannot write file: " + out_path);
        out << g6 << "\n";
    }
    json j;
    j["graph6"] = g6;
    j["n_prime"] = inst.graph.vertex_count();
    if (format != "json") std::cout << g6 << "\n";
    int exit_code = kExitDecided;
    if (verify_equivalence) {
        balance::ReductionReport rep = balance::reduction_equivalence_check(g);
        if (!rep.complete()) exit_code = kExitUndecided;
        j["m"] = rep.m;
        if (rep.edge_colorable_4) j["edge_colorable_4"] = *rep.edge_colorable_4;
        if (rep.alpha_prime) j["alpha_prime"] = *rep.alpha_prime;
        j["simply_balanceable_prime"] = balance::to_string(rep.simply_balanceable_prime.status);
        if (rep.equivalence_ok) j["equivalence_ok"] = *rep.equivalence_ok;
        if (format != "json") {
            std::cout << "m: " << rep.m << "\n";
            std::cout << "n_prime: " << rep.n_prime << "\n";
            if (rep.edge_colorable_4)
                std::cout << "edge_colorable_4: " << (*rep.edge_colorable_4 ? "true" : "false") << "\n";
            if (rep.alpha_prime) std::cout << "alpha_prime: " << *rep.alpha_prime << "\n";
            std::cout << "simply_balanceable_prime: " << balance::to_string(rep.simply_balanceable_prime.status)
                      << "\n";
            if (rep.equivalence_ok)
                std::cout << "equivalence_ok: " << (*rep.equivalence_ok ? "true" : "false") << "\n";
        }
    }
    if (format == "json") std::cout << j.dump() << "\n";
    return exit_code;
}

int run_batch(const std::string& path, const std::string& property_name, const std::string& method_name,
              int cap, const std::string& format) {
    balance::BalanceProperty property = parse_property(property_name);
    balance::DecideMethod method = parse_method(method_name);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw balance::parse_error("cannot open file: " + path);
    std::string line;
    int lineno = 0, holds = 0, fails = 0, undecided = 0, errors = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            balance::Graph g = balance::parse_graph6(line);
            balance::Verdict v = balance::decide(g, property, method, cap);
            switch (v.status) {
            case balance::VerdictStatus::holds: ++holds; break;
            case balance::VerdictStatus::fails: ++fails; break;
            default: ++undecided; break;
            }
            if (format == "json") {
                json j = verdict_to_json(v, property);
                j["line"] = lineno;
                j["graph6"] = line;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << lineno << "\t" << line << "\t" << balance::to_string(v.status) << "\t" << v.method
                          << "\n";
            }
        } catch (const std::exception& e) {
            ++errors;
            if (format == "json") {
                json j;
                j["line"] = lineno;
                j["error"] = e.what();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << lineno << "\t" << line << "\terror\t" << e.what() << "\n";
            }
        }
    }
    if (format == "json") {
        json j;
        j["summary"] = {{"holds", holds}, {"fails", fails}, {"undecided", undecided}, {"errors", errors}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "summary: holds " << holds << ", fails " << fails << ", undecided " << undecided
                  << ", errors " << errors << "\n";
    }
    return errors > 0 ? kExitInput : kExitDecided;
}

std::vector<int> parse_connections(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

int run_gen(const std::string& family, int n, int a, int b, int d, int k, const std::string& connections,
            std::uint64_t seed) {
    balance::Graph g;
    if (family == "cycle")
        g = balance::make_cycle(n);
    else if (family == "path")
        g = balance::make_path(n);
    else if (family == "complete")
        g = balance::make_complete(n);
    else if (family == "complete-bipartite")
        g = balance::make_complete_bipartite(a, b);
    else if (family == "circulant")
        g = balance::make_circulant(n, parse_connections(connections));
    else if (family == "hypercube")
        g = balance::make_hypercube(d);
    else if (family == "petersen")
        g = balance::make_petersen();
    else if (family == "random-regular")
        g = balance::make_random_regular(n, k, seed);
    else
        throw balance::parse_error("unknown family: " + family);
    std::cout << balance::write_graph6(g) << "\n";
    return kExitDecided;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"balance-lab: balanceable and simply balanceable graph toolkit"};
    app.require_subcommand(1);

    int cap = oracle_cap_from_env();
    std::string format = "text";
    app.add_option("--cap", cap, "exhaustive-oracle vertex cap")->capture_default_str();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    GraphInput check_input, certify_input, reduce_input;
    std::string property = "balanceable", method = "auto", certificate_path;
    auto* check = app.add_subcommand("check", "decide a balance property");
    check_input.attach(check);
    check->add_option("--property", property, "balanceable | simply-balanceable");
    check->add_option("--method", method, "auto | theorem | oracle");
    check->add_option("--certificate", certificate_path, "verify this certificate file instead of deciding");

    std::string certify_out;
    bool certify_verify = false;
    auto* certify = app.add_subcommand("certify", "construct a balance certificate (cubic / 4-regular)");
    certify_input.attach(certify);
    certify->add_option("--out", certify_out, "write the certificate JSON here");
    certify->add_flag("--verify", certify_verify, "re-read and re-check the emitted certificate");

    bool verify_equivalence = false;
    std::string reduce_out;
    auto* reduce = app.add_subcommand("reduce", "emit the hardness instance L(G) x K4");
    reduce_input.attach(reduce);
    reduce->add_flag("--verify-equivalence", verify_equivalence, "run the full equivalence check");
    reduce->add_option("--out", reduce_out, "write the instance graph6 here");

    std::string batch_path;
    auto* batch = app.add_subcommand("batch", "decide a property for every graph6 line in a file");
    batch->add_option("file", batch_path, "file of graph6 lines")->required();
    batch->add_option("--property", property, "balanceable | simply-balanceable");
    batch->add_option("--method", method, "auto | theorem | oracle");

    std::string family, connections;
    int gen_n = 0, gen_a = 0, gen_b = 0, gen_d = 0, gen_k = 0;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "emit a named or random graph as graph6");
    gen->add_option("--family", family,
                    "cycle | path | complete | complete-bipartite | circulant | hypercube | petersen | random-regular")
        ->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--a", gen_a, "first part size");
    gen->add_option("--b", gen_b, "second part size");
    gen->add_option("--d", gen_d, "hypercube dimension");
    gen->add_option("--k", gen_k, "degree");
    gen->add_option("--connections", connections, "circulant connection set, e.g. 1,2");
    gen->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(check_input, property, method, cap, format, certificate_path);
        if (certify->parsed()) return run_certify(certify_input, certify_out, certify_verify, format);
        if (reduce->parsed()) return run_reduce(reduce_input, verify_equivalence, reduce_out, format);
        if (batch->parsed()) return run_batch(batch_path, property, method, cap, format);
        if (gen->parsed()) return run_gen(family, gen_n, gen_a, gen_b, gen_d, gen_k, connections, seed);
    } catch (const balance::defect_error& e) {
        std::cerr << "defect: " << e.what() << "\n";
        return kExitDefect;
    } catch (const balance::inapplicable_error& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
