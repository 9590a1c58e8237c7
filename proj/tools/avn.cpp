// avn: runs the built-in contextuality/nonlocality verifications and searches
// user scenario files for noncontextual +-1 assignments.
//
// Exit status: 0 all requested checks came out as expected, 1 a verification
// mismatched its expected conclusion (or a quantum check failed), 2 usage or
// parse errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "avn/avn.hpp"

namespace {

int run_verify(const std::string& name, const std::string& format) {
    std::vector<const avn::CatalogEntry*> todo;
    if (name == "all") {
        for (const avn::CatalogEntry& e : avn::catalog()) todo.push_back(&e);
    } else {
        const avn::CatalogEntry* e = avn::find_catalog_entry(name);
        if (!e) {
            std::cerr << "error: unknown verification '" << name << "'; known names:";
            for (const avn::CatalogEntry& k : avn::catalog()) std::cerr << ' ' << k.name;
            std::cerr << " all\n";
            return 2;
        }
        todo.push_back(e);
    }

    bool ok = true;
    avn::Json out = avn::Json::array();
    for (const avn::CatalogEntry* e : todo) {
        const avn::VerificationReport rep = e->run();
        const bool matches = rep.conclusion == e->expected && rep.all_checks_pass();
        ok = ok && matches;
        if (format == "json") {
            avn::Json j = avn::to_json(rep);
            j["expected_conclusion"] = std::string(avn::conclusion_name(e->expected));
            j["as_expected"] = matches;
            out.push_back(std::move(j));
        } else {
            std::cout << avn::render_text(rep);
            std::cout << "expected: " << avn::conclusion_name(e->expected) << " -> "
                      << (matches ? "ok" : "MISMATCH") << "\n\n";
        }
    }
    if (format == "json") std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

int run_search(const std::string& path, const std::string& format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();

    const avn::ParseResult parsed = avn::parse_scenario(text);
    if (!parsed.ok()) {
        for (const avn::Diagnostic& d : parsed.diagnostics)
            std::cerr << path << ":" << d.str() << "\n";
        return 2;
    }
    const avn::SearchResult result = avn::search(*parsed.scenario);
    if (format == "json")
        std::cout << avn::to_json(*parsed.scenario, result).dump(2) << "\n";
    else
        std::cout << avn::render_search_text(*parsed.scenario, result);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"all-versus-nothing contextuality / nonlocality verifier"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string verify_name;
    std::string search_path;

    CLI::App* verify = app.add_subcommand("verify", "run built-in verifications");
    verify->add_option("name", verify_name, "catalog entry name, or 'all'")->required();
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* search = app.add_subcommand("search", "search a scenario file for assignments");
    search->add_option("file", search_path, "scenario file")->required();
    search->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* list = app.add_subcommand("list", "list catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(verify_name, format);
        if (search->parsed()) return run_search(search_path, format);
        if (list->parsed()) {
            for (const avn::CatalogEntry& e : avn::catalog())
                std::cout << e.name << "  (" << avn::conclusion_name(e.expected)
                          << " expected)  " << e.title << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
