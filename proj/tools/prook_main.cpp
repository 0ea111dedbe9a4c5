#include "prook/algebra.hpp"
#include "prook/characters.hpp"
#include "prook/diagram.hpp"
#include "prook/io.hpp"
#include "prook/representation.hpp"
#include "prook/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using namespace prook;

// Documented default for every randomized tier; pass --seed to override.
constexpr std::uint64_t kDefaultSeed = 1729;

void require_bound(int value, int bound, const char* what) {
    if (value > bound)
        throw std::invalid_argument(std::string(what) + " is limited to " +
                                    std::to_string(bound) +
                                    " to keep runtime bounded");
    if (value < 0)
        throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

int run_enumerate(int n, int rank, bool rankSet, bool countOnly,
                  const std::string& format) {
    require_bound(n, countOnly ? 12 : 8, "--n");
    if (rankSet && (rank < 0 || rank > n))
        throw std::invalid_argument("--rank must lie in 0..n");
    if (countOnly) {
        long long total = 0;
        if (rankSet) {
            total = binomial(n, rank) * binomial(n, rank);
        } else {
            total = diagram_count(n);
        }
        std::cout << total << '\n';
        return 0;
    }
    if (format == "json") {
        Json arr = Json::array();
        DiagramStream stream(n);
        while (auto d = stream.next())
            if (!rankSet || d->rank() == rank)
                arr.push_back(diagram_to_json(*d));
        std::cout << arr.dump() << '\n';
    } else if (format == "lines") {
        DiagramStream stream(n);
        while (auto d = stream.next())
            if (!rankSet || d->rank() == rank)
                std::cout << diagram_to_compact(*d) << '\n';
    } else {
        throw std::invalid_argument("--format must be lines or json");
    }
    return 0;
}

int run_compose(const std::string& a, const std::string& b,
                const std::string& format) {
    PlanarDiagram left = parse_diagram(a);
    PlanarDiagram right = parse_diagram(b);
    PlanarDiagram result = compose(left, right);
    if (format == "json")
        std::cout << diagram_to_json(result).dump() << '\n';
    else
        std::cout << diagram_to_compact(result) << '\n';
    return 0;
}

int run_apply(const std::string& diagram, const std::string& set) {
    PlanarDiagram d = parse_diagram(diagram);
    Mask s = set_from_string(d.size(), set);
    auto image = apply(d, s);
    if (!image) {
        std::cout << "0\n"; // the action kills the basis vector
        return 0;
    }
    std::cout << '{';
    auto elems = elements(*image);
    for (std::size_t i = 0; i < elems.size(); ++i)
        std::cout << (i ? "," : "") << elems[i];
    std::cout << "}\n";
    return 0;
}

int run_rep(int n, int k, const std::string& diagram, bool xBasis) {
    require_bound(n, 8, "--n");
    if (k < 0 || k > n)
        throw std::invalid_argument("--k must lie in 0..n");
    PlanarDiagram d = parse_diagram(diagram);
    if (d.size() != n)
        throw std::invalid_argument("diagram size differs from --n");
    RationalMatrix m =
        xBasis ? rho_algebra(n, k, x_of(d)) : rho(n, k, d);
    std::cout << irrep_matrix_to_json(n, k, m).dump() << '\n';
    return 0;
}

int run_char_table(int n, const std::string& format) {
    require_bound(n, 12, "--n");
    CharacterTable t = character_table(n);
    if (format == "json")
        std::cout << character_table_json(t).dump() << '\n';
    else if (format == "csv")
        std::cout << character_table_csv(t);
    else
        throw std::invalid_argument("--format must be csv or json");
    return 0;
}

int run_bratteli(int rows, const std::string& format) {
    require_bound(rows, 16, "--rows");
    BratteliGraph g = bratteli(rows);
    if (format == "json")
        std::cout << bratteli_json(g).dump() << '\n';
    else if (format == "dot")
        std::cout << bratteli_dot(g);
    else
        throw std::invalid_argument("--format must be dot or json");
    return 0;
}

int run_tensor(int n, int i, int j) {
    require_bound(n, 16, "--n");
    std::cout << multiplicities_json(tensor_multiplicities(n, i, j)).dump()
              << '\n';
    return 0;
}

int run_center(int n) {
    require_bound(n, 6, "--n");
    std::vector<AlgebraElement> basis = center_basis(n);
    bool allCentral = true;
    for (int l = 0; l <= n; ++l) {
        std::cout << "z_" << l << " = "
                  << element_to_json(basis[static_cast<std::size_t>(l)]).dump()
                  << '\n';
        if (!is_central(basis[static_cast<std::size_t>(l)]))
            allCentral = false;
    }
    std::cout << "central: " << (allCentral ? "yes" : "NO") << '\n';
    std::cout << "dimension: " << (n + 1) << '\n';
    return allCentral ? 0 : 1;
}

int run_xbasis(const std::string& diagram) {
    PlanarDiagram d = parse_diagram(diagram);
    if (d.rank() > 20)
        throw std::invalid_argument("rank above 20 makes the expansion huge");
    std::cout << element_to_json(x_of(d)).dump() << '\n';
    return 0;
}

int run_trace(int n, const std::string& diagram, bool regular) {
    require_bound(n, regular ? 10 : 12, "--n");
    PlanarDiagram d = parse_diagram(diagram);
    if (d.size() != n)
        throw std::invalid_argument("diagram size differs from --n");
    if (regular) {
        std::cout << regular_trace(n, d) << '\n';
        return 0;
    }
    for (int k = 0; k <= n; ++k)
        std::cout << (k ? "," : "") << chi(n, k, d);
    std::cout << '\n';
    return 0;
}

int run_verify_cmd(int nMax, const std::string& suite, std::uint64_t seed) {
    require_bound(nMax, 6, "--n-max");
    std::cout << "suite: " << suite << '\n';
    std::cout << "n-max: " << nMax << '\n';
    std::cout << "seed: " << seed << '\n';
    VerifyReport report = run_verify(suite, nMax, seed);
    int passed = 0;
    for (const auto& check : report.checks) {
        if (check.passed) {
            ++passed;
            std::cout << "PASS " << check.name << " (" << check.cases
                      << " cases)\n";
        } else {
            std::cout << "FAIL " << check.name << ": " << check.witness
                      << '\n';
        }
    }
    std::cout << "summary: " << passed << '/' << report.checks.size()
              << " passed\n";
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar rook monoid and diagram algebra toolkit"};
    app.require_subcommand(1);

    auto* enumerateCmd =
        app.add_subcommand("enumerate", "list or count all diagrams");
    int enumN = 0;
    int enumRank = 0;
    bool enumCountOnly = false;
    std::string enumFormat = "lines";
    enumerateCmd->add_option("--n", enumN, "row size")->required();
    auto* rankOpt = enumerateCmd->add_option("--rank", enumRank,
                                             "restrict to one rank");
    enumerateCmd->add_flag("--count-only", enumCountOnly,
                           "print the count instead of the diagrams");
    enumerateCmd->add_option("--format", enumFormat, "lines or json");

    auto* composeCmd =
        app.add_subcommand("compose", "multiply two diagrams");
    std::string composeA, composeB;
    std::string composeFormat = "compact";
    composeCmd->add_option("--a", composeA, "left factor")->required();
    composeCmd->add_option("--b", composeB, "right factor")->required();
    composeCmd->add_option("--format", composeFormat, "compact or json");

    auto* applyCmd =
        app.add_subcommand("apply", "act on a subset basis vector");
    std::string applyDiagram, applySet;
    applyCmd->add_option("--diagram", applyDiagram, "acting diagram")
        ->required();
    applyCmd->add_option("--set", applySet,
                         "comma-separated vertex list (empty for {})");

    auto* repCmd = app.add_subcommand(
        "rep", "matrix of a diagram on the k-subset module");
    int repN = 0, repK = 0;
    std::string repDiagram;
    bool repXBasis = false;
    repCmd->add_option("--n", repN, "row size")->required();
    repCmd->add_option("--k", repK, "subset size")->required();
    repCmd->add_option("--diagram", repDiagram, "diagram")->required();
    repCmd->add_flag("--x-basis", repXBasis,
                     "act by the alternating-sum basis element instead");

    auto* charCmd = app.add_subcommand("char-table", "character table");
    int charN = 0;
    std::string charFormat = "csv";
    charCmd->add_option("--n", charN, "row size")->required();
    charCmd->add_option("--format", charFormat, "csv or json");

    auto* bratteliCmd =
        app.add_subcommand("bratteli", "branching graph of the module tower");
    int bratteliRows = 0;
    std::string bratteliFormat = "dot";
    bratteliCmd->add_option("--rows", bratteliRows, "number of rows")
        ->required();
    bratteliCmd->add_option("--format", bratteliFormat, "dot or json");

    auto* tensorCmd = app.add_subcommand(
        "tensor", "multiplicities in a tensor product of modules");
    int tensorN = 0, tensorI = 0, tensorJ = 0;
    tensorCmd->add_option("--n", tensorN, "row size")->required();
    tensorCmd->add_option("--i", tensorI, "first module")->required();
    tensorCmd->add_option("--j", tensorJ, "second module")->required();

    auto* centerCmd =
        app.add_subcommand("center", "basis of the center with a report");
    int centerN = 0;
    centerCmd->add_option("--n", centerN, "row size")->required();

    auto* xbasisCmd = app.add_subcommand(
        "xbasis", "alternating-sum expansion of a diagram");
    std::string xbasisDiagram;
    xbasisCmd->add_option("--diagram", xbasisDiagram, "diagram")->required();

    auto* traceCmd =
        app.add_subcommand("trace", "module characters at a diagram");
    int traceN = 0;
    std::string traceDiagram;
    bool traceRegular = false;
    traceCmd->add_option("--n", traceN, "row size")->required();
    traceCmd->add_option("--diagram", traceDiagram, "diagram")->required();
    traceCmd->add_flag("--regular", traceRegular,
                       "trace on the span of all diagrams instead");

    auto* verifyCmd =
        app.add_subcommand("verify", "run the invariant suites");
    int verifyNMax = 0;
    std::string verifySuite = "all";
    std::uint64_t verifySeed = kDefaultSeed;
    verifyCmd->add_option("--n-max", verifyNMax, "exhaustive tier bound")
        ->required();
    verifyCmd->add_option(
        "--suite", verifySuite,
        "all, monoid, algebra, repr, chars or wedderburn");
    verifyCmd->add_option("--seed", verifySeed,
                          "randomized tier seed (default 1729)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerateCmd->parsed())
            return run_enumerate(enumN, enumRank, rankOpt->count() > 0,
                                 enumCountOnly, enumFormat);
        if (composeCmd->parsed())
            return run_compose(composeA, composeB, composeFormat);
        if (applyCmd->parsed())
            return run_apply(applyDiagram, applySet);
        if (repCmd->parsed())
            return run_rep(repN, repK, repDiagram, repXBasis);
        if (charCmd->parsed())
            return run_char_table(charN, charFormat);
        if (bratteliCmd->parsed())
            return run_bratteli(bratteliRows, bratteliFormat);
        if (tensorCmd->parsed())
            return run_tensor(tensorN, tensorI, tensorJ);
        if (centerCmd->parsed())
            return run_center(centerN);
        if (xbasisCmd->parsed())
            return run_xbasis(xbasisDiagram);
        if (traceCmd->parsed())
            return run_trace(traceN, traceDiagram, traceRegular);
        if (verifyCmd->parsed())
            return run_verify_cmd(verifyNMax, verifySuite, verifySeed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
