#include <mpart/error.hh>
#include <mpart/satgadget.hh>

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace mpart {

namespace {
    class GraphBuilder
    {
    public:
        auto add() -> Element { return Element(size_++); }
        auto edge(Element from, Element to) -> void { edges_.emplace_back(from, to); }

        auto build(Category cat) const -> LStructure
        {
            LStructure s(Signature({Symbol{"E", 2}}), cat, size_);
            for (auto [a, b] : edges_) {
                Tuple t{a, b};
                s.set_label(0, t, Label::One);
            }
            return s;
        }

    private:
        std::size_t size_ = 0;
        std::vector<std::pair<Element, Element>> edges_;
    };

    // Appends a copy of variable_path(i, n) whose position 0 is `start`.
    auto add_path(GraphBuilder & g, Element start, std::size_t i, std::size_t n, std::vector<GadgetPlace> & places,
        GadgetPlace place) -> std::vector<Element>
    {
        std::vector<Element> path{start};
        for (std::size_t j = 1; j <= n + 4; ++j) {
            auto next = g.add();
            place.position = j;
            places.push_back(place);
            if (j == i + 1)
                g.edge(next, path.back());
            else
                g.edge(path.back(), next);
            path.push_back(next);
        }
        return path;
    }

    auto clause_index(const std::array<int, 3> & clause) -> std::size_t
    {
        auto s = conjunct_signs(clause);
        return std::size_t(4 * s[0] + 2 * s[1] + s[2] + 1);
    }

    // The one assignment (4v1 + 2v2 + v3) of the clause's positions that falsifies it.
    auto falsifying(const std::array<int, 3> & clause) -> unsigned
    {
        unsigned bits = 0;
        for (auto lit : clause)
            bits = bits * 2 + (lit < 0 ? 1 : 0);
        return bits;
    }

    auto bit(unsigned assignment, std::size_t slot) -> int { return int((assignment >> (2 - slot)) & 1U); }
}

auto conjunct_signs(const std::array<int, 3> & clause) -> std::array<int, 3>
{
    return {clause[0] > 0 ? 1 : 0, clause[1] > 0 ? 1 : 0, clause[2] > 0 ? 1 : 0};
}

auto parse_dimacs(std::string_view text) -> Cnf3
{
    Cnf3 cnf;
    bool header = false;
    std::size_t declared = 0, line_number = 0;
    std::vector<int> pending;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream words(line);
        std::string first;
        if (! (words >> first) || first == "c" || first[0] == 'c')
            continue;
        if (first == "%")
            break;
        if (first == "p") {
            if (header)
                throw ParseError(line_number, "duplicate problem line");
            std::string format;
            long long vars = -1, clauses = -1;
            std::string extra;
            if (! (words >> format >> vars >> clauses) || format != "cnf" || vars < 0 || clauses < 0 || (words >> extra))
                throw ParseError(line_number, "malformed problem line, expected 'p cnf VARS CLAUSES'");
            cnf.num_vars = std::size_t(vars);
            declared = std::size_t(clauses);
            header = true;
            continue;
        }
        if (! header)
            throw ParseError(line_number, "clause before the 'p cnf' problem line");

        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            long long lit = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), lit);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError(line_number, "bad literal '" + token + "'");
            if (lit == 0) {
                if (pending.size() != 3)
                    throw ParseError(line_number, "clause has " + std::to_string(pending.size()) +
                        " literals, exactly 3 are required");
                cnf.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            if (std::size_t(std::llabs(lit)) > cnf.num_vars)
                throw ParseError(line_number, "variable " + std::to_string(std::llabs(lit)) + " out of range 1.." +
                    std::to_string(cnf.num_vars));
            pending.push_back(int(lit));
        }
    }
    if (! header)
        throw ParseError(line_number, "missing 'p cnf' problem line");
    if (! pending.empty())
        throw ParseError(line_number, "last clause is not terminated by 0");
    if (cnf.clauses.size() != declared)
        throw ParseError(line_number, "header declares " + std::to_string(declared) + " clauses, found " +
            std::to_string(cnf.clauses.size()));
    return cnf;
}

auto serialize_dimacs(const Cnf3 & cnf) -> std::string
{
    std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " + std::to_string(cnf.clauses.size()) + "\n";
    for (auto & c : cnf.clauses)
        out += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]) + " 0\n";
    return out;
}

auto satisfies(const Cnf3 & cnf, const std::vector<bool> & assignment) -> bool
{
    if (assignment.size() != cnf.num_vars)
        throw ValidationError("assignment has the wrong number of variables");
    for (auto & c : cnf.clauses) {
        bool ok = false;
        for (auto lit : c)
            ok = ok || assignment[std::size_t(std::abs(lit)) - 1] == (lit > 0);
        if (! ok)
            return false;
    }
    return true;
}

auto brute_force_sat(const Cnf3 & cnf) -> std::optional<std::vector<bool>>
{
    if (cnf.num_vars > max_brute_force_vars)
        throw ResourceLimitError("brute-force SAT is limited to " + std::to_string(max_brute_force_vars) + " variables");
    std::vector<bool> v(cnf.num_vars);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cnf.num_vars); ++bits) {
        for (std::size_t i = 0; i < cnf.num_vars; ++i)
            v[i] = (bits >> (cnf.num_vars - 1 - i)) & 1U;
        if (satisfies(cnf, v))
            return v;
    }
    return std::nullopt;
}

auto variable_path(std::size_t i, std::size_t n) -> LStructure
{
    if (i < 1 || i > n)
        throw ValidationError("path index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    GraphBuilder g;
    std::vector<GadgetPlace> places(1);
    add_path(g, g.add(), i, n, places, {});
    return g.build(Category::Cat01);
}

auto clause_path(int n1, int n2, int n3) -> LStructure
{
    for (int s : {n1, n2, n3})
        if (s != 0 && s != 1)
            throw ValidationError("clause signs must be 0 or 1");
    return variable_path(std::size_t(4 * n1 + 2 * n2 + n3 + 1), 8);
}

auto expected_tree_size(std::size_t n, std::size_t m) -> std::size_t { return 1 + m * (3 * n + 25); }

auto expected_target_size(std::size_t n, std::size_t m) -> std::size_t { return 1 + m * (21 * n + 103); }

auto build_gadget(const Cnf3 & cnf) -> GadgetPair
{
    const auto n = cnf.num_vars;
    for (auto & c : cnf.clauses)
        for (auto lit : c)
            if (lit == 0 || std::size_t(std::abs(lit)) > n)
                throw ValidationError("literal " + std::to_string(lit) + " out of range");

    GadgetPair out;
    out.cnf = cnf;
    using Part = GadgetPlace::Part;

    GraphBuilder t;
    out.root_tree = t.add();
    out.tree_places.push_back({});
    for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
        auto & clause = cnf.clauses[c];
        GadgetPlace base{Part::ClausePath, c, 0, 0, 0, -1, 0};
        auto spine = add_path(t, out.root_tree, clause_index(clause), 8, out.tree_places, base);
        auto head = t.add();
        out.tree_places.push_back({Part::Head, c, 0, 0, 0, -1, 0});
        t.edge(spine.back(), head);
        std::array<std::vector<Element>, 3> paths;
        for (std::size_t j = 0; j < 3; ++j) {
            auto var = std::size_t(std::abs(clause[j]));
            paths[j] = add_path(t, head, var, n, out.tree_places, {Part::VariablePath, c, 0, j, var, -1, 0});
        }
        out.tree_clause_paths.push_back(std::move(spine));
        out.tree_heads.push_back(head);
        out.tree_paths.push_back(std::move(paths));
    }
    out.tree = t.build(Category::Cat01);

    GraphBuilder h;
    out.root_target = h.add();
    out.target_places.push_back({});
    struct Copy
    {
        std::size_t variable;
        int tag;
        Element leaf;
    };
    std::vector<Copy> copies;
    for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
        auto & clause = cnf.clauses[c];
        auto spine = add_path(h, out.root_target, clause_index(clause), 8, out.target_places,
            {Part::ClausePath, c, 0, 0, 0, -1, 0});
        std::vector<GadgetPair::Branch> branches;
        auto excluded = falsifying(clause);
        for (unsigned v = 0; v < 8; ++v) {
            if (v == excluded)
                continue;
            auto b = branches.size();
            GadgetPair::Branch branch{v, h.add(), {}};
            out.target_places.push_back({Part::Head, c, b, 0, 0, -1, 0});
            h.edge(spine.back(), branch.head);
            for (std::size_t j = 0; j < 3; ++j) {
                auto var = std::size_t(std::abs(clause[j]));
                branch.paths[j] = add_path(h, branch.head, var, n, out.target_places,
                    {Part::VariablePath, c, b, j, var, bit(v, j), 0});
                copies.push_back({var, bit(v, j), branch.paths[j].back()});
            }
            branches.push_back(std::move(branch));
        }
        out.target_clause_paths.push_back(std::move(spine));
        out.target_branches.push_back(std::move(branches));
    }
    for (auto & x : copies)
        for (auto & y : copies)
            if (x.variable == y.variable && x.tag == 1 && y.tag == 0)
                h.edge(x.leaf, y.leaf);
    out.target = h.build(Category::CatStar);
    for (auto & p : out.target_places)
        p.in_target = true;
    return out;
}

auto assignment_to_hom(const GadgetPair & gadget, const std::vector<bool> & assignment) -> HomMap
{
    if (! satisfies(gadget.cnf, assignment))
        throw ValidationError("assignment does not satisfy the formula");
    HomMap map{gadget.target.size(), std::vector<Element>(gadget.tree.size(), 0)};
    map.image[gadget.root_tree] = gadget.root_target;
    for (std::size_t c = 0; c < gadget.cnf.clauses.size(); ++c) {
        auto & clause = gadget.cnf.clauses[c];
        unsigned bits = 0;
        for (auto lit : clause)
            bits = bits * 2 + (assignment[std::size_t(std::abs(lit)) - 1] ? 1 : 0);
        const GadgetPair::Branch * branch = nullptr;
        for (auto & b : gadget.target_branches[c])
            if (b.assignment == bits)
                branch = &b;
        if (! branch)
            throw ValidationError("no branch for the assignment in clause " + std::to_string(c + 1));
        auto & spine = gadget.tree_clause_paths[c];
        for (std::size_t p = 0; p < spine.size(); ++p)
            map.image[spine[p]] = gadget.target_clause_paths[c][p];
        map.image[gadget.tree_heads[c]] = branch->head;
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t p = 0; p < gadget.tree_paths[c][j].size(); ++p)
                map.image[gadget.tree_paths[c][j][p]] = branch->paths[j][p];
    }
    return map;
}

auto hom_to_assignment(const GadgetPair & gadget, const HomMap & map) -> std::vector<bool>
{
    if (! is_homomorphism(gadget.tree, gadget.target, map))
        throw ValidationError("map is not a homomorphism from the tree to the target");
    std::vector<int> value(gadget.cnf.num_vars, -1);
    for (std::size_t c = 0; c < gadget.tree_paths.size(); ++c)
        for (std::size_t j = 0; j < 3; ++j) {
            auto leaf = gadget.tree_paths[c][j].back();
            auto & place = gadget.target_places[map.image[leaf]];
            auto var = std::size_t(std::abs(gadget.cnf.clauses[c][j]));
            if (place.part != GadgetPlace::Part::VariablePath || place.variable != var)
                throw ValidationError("endpoint of a path for x" + std::to_string(var) +
                    " does not land on a copy of the same path");
            auto & slot = value[var - 1];
            if (slot >= 0 && slot != place.tag)
                throw ValidationError("copies of the path for x" + std::to_string(var) + " disagree");
            slot = place.tag;
        }
    std::vector<bool> out(value.size());
    for (std::size_t i = 0; i < value.size(); ++i)
        out[i] = value[i] == 1;
    return out;
}

auto verify_reduction(const Cnf3 & cnf, const SolveOptions & options) -> ReductionReport
{
    ReductionReport report;
    auto gadget = build_gadget(cnf);
    report.tree_size = gadget.tree.size();
    report.target_size = gadget.target.size();
    report.size_ok = report.tree_size == expected_tree_size(cnf.num_vars, cnf.clauses.size()) &&
        report.target_size == expected_target_size(cnf.num_vars, cnf.clauses.size());

    report.sat = brute_force_sat(cnf).has_value();
    auto witness = find_homomorphism(gadget.tree, gadget.target, options);
    report.hom = witness.has_value();

    auto pinned = options;
    pinned.pinned.emplace_back(gadget.root_tree, gadget.root_target);
    report.pinned_ok = find_homomorphism(gadget.tree, gadget.target, pinned).has_value() == report.hom;

    auto forbidden = options;
    forbidden.forbidden.emplace_back(gadget.root_tree, gadget.root_target);
    report.forbidden_ok = ! find_homomorphism(gadget.tree, gadget.target, forbidden).has_value();

    if (witness) {
        report.root_ok = witness->image[gadget.root_tree] == gadget.root_target;
        try {
            report.assignment = hom_to_assignment(gadget, *witness);
            report.readback_ok = satisfies(cnf, report.assignment);
        }
        catch (const ValidationError &) {
            report.readback_ok = false;
        }
    }
    return report;
}

auto serialize_reduction_report(const Cnf3 & cnf, const ReductionReport & report) -> std::string
{
    auto yes = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream out;
    out << "SAT=" << yes(report.sat) << " HOM=" << yes(report.hom) << " EQUIV=" << yes(report.equivalent()) << '\n';
    out << "variables " << cnf.num_vars << '\n';
    out << "clauses " << cnf.clauses.size() << '\n';
    out << "tree-size " << report.tree_size << " expected " << expected_tree_size(cnf.num_vars, cnf.clauses.size())
        << '\n';
    out << "target-size " << report.target_size << " expected "
        << expected_target_size(cnf.num_vars, cnf.clauses.size()) << '\n';
    out << "size-check " << yes(report.size_ok) << '\n';
    out << "root-check " << yes(report.root_ok) << '\n';
    out << "pinned-root-check " << yes(report.pinned_ok) << '\n';
    out << "forbidden-root-check " << yes(report.forbidden_ok) << '\n';
    if (report.hom) {
        out << "assignment";
        for (std::size_t i = 0; i < report.assignment.size(); ++i)
            out << " x" << i + 1 << '=' << (report.assignment[i] ? 1 : 0);
        out << '\n';
        out << "assignment-check " << yes(report.readback_ok) << '\n';
    }
    return out.str();
}

auto serialize_places(const std::vector<GadgetPlace> & places) -> std::string
{
    std::ostringstream out;
    for (std::size_t e = 0; e < places.size(); ++e) {
        auto & p = places[e];
        out << e << ' ';
        switch (p.part) {
            case GadgetPlace::Part::Root: out << "root"; break;
            case GadgetPlace::Part::ClausePath:
                out << "clause " << p.clause + 1 << " clause-path " << p.position;
                break;
            case GadgetPlace::Part::Head:
                out << "clause " << p.clause + 1;
                if (p.in_target)
                    out << " branch " << p.branch + 1;
                out << " head";
                break;
            case GadgetPlace::Part::VariablePath:
                out << "clause " << p.clause + 1;
                if (p.in_target)
                    out << " branch " << p.branch + 1;
                out << " path " << p.slot + 1 << " x" << p.variable;
                if (p.tag >= 0)
                    out << " value " << p.tag;
                out << " position " << p.position;
                break;
        }
        out << '\n';
    }
    return out.str();
}

}
