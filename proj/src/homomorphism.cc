#include <mpart/error.hh>
#include <mpart/homomorphism.hh>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>

namespace mpart {

namespace {
    using Word = std::uint64_t;

    // Tables with more entries than this are not materialised; constraints over
    // them are evaluated atom by atom instead.
    constexpr std::uint64_t max_table_entries = std::uint64_t{1} << 22;

    struct Order
    {
        std::array<std::array<bool, 4>, 4> leq{};
        std::array<bool, 4> bottom{};
    };

    auto make_order(Category cat) -> Order
    {
        Order o;
        auto labels = labels_of(cat);
        for (auto a : labels) {
            bool below_all = true;
            for (auto b : labels) {
                o.leq[std::size_t(a)][std::size_t(b)] = label_leq(a, b, cat);
                below_all = below_all && o.leq[std::size_t(a)][std::size_t(b)];
            }
            o.bottom[std::size_t(a)] = below_all;
        }
        return o;
    }

    // One labelled tuple of G, rewritten over the distinct elements it mentions.
    struct Atom
    {
        std::uint32_t symbol;
        std::vector<std::uint8_t> pattern;
        Label label;

        auto operator<=>(const Atom &) const = default;
    };

    struct BinaryTable
    {
        // fwd row a: allowed values of the second scope variable when the first is a.
        std::vector<Word> fwd, bwd;
    };

    struct NaryKind
    {
        std::vector<Atom> atoms;
        unsigned width = 0;
        std::vector<std::uint8_t> table;
    };

    struct NaryConstraint
    {
        std::vector<Element> scope;
        std::uint32_t kind;
    };

    struct Neighbour
    {
        Element other;
        std::uint32_t table;
        bool first;
    };

    auto popcount(const Word * d, std::size_t words) -> std::size_t
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words; ++i)
            c += std::popcount(d[i]);
        return c;
    }

    auto first_bit(const Word * d, std::size_t words) -> std::size_t
    {
        for (std::size_t i = 0; i < words; ++i)
            if (d[i])
                return i * 64 + std::countr_zero(d[i]);
        return words * 64;
    }

    auto test_bit(const Word * d, std::size_t b) -> bool { return (d[b / 64] >> (b % 64)) & 1U; }

    class Model
    {
    public:
        Model(const LStructure & g, const LStructure & h, const SolveOptions & options) :
            n(g.size()),
            m(h.size()),
            words((h.size() + 63) / 64),
            adjacency(g.size()),
            nary_of(g.size()),
            order_(make_order(check_comparable(g, h)))
        {
            if (n == 0 || m == 0) {
                infeasible = n != 0;
                return;
            }
            for (std::size_t r = 0; r < h.signature().size(); ++r) {
                if (h.tuple_count(r) > (std::uint64_t{1} << 28))
                    throw ResourceLimitError("target relation table too large for the solver");
                target_.push_back(h.dense(r));
            }

            domains.assign(n * words, 0);
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t a = 0; a < m; ++a)
                    domains[x * words + a / 64] |= Word{1} << (a % 64);

            collect_constraints(g);
            apply_restrictions(options);
        }

        std::size_t n, m, words;
        bool infeasible = false;
        std::vector<Word> domains;
        std::vector<std::vector<Neighbour>> adjacency;
        std::vector<BinaryTable> binary_tables;
        std::vector<NaryKind> nary_kinds;
        std::vector<NaryConstraint> nary;
        std::vector<std::vector<std::uint32_t>> nary_of;

        auto allows(const std::vector<Atom> & atoms, const Element * values) const -> bool
        {
            for (auto & atom : atoms) {
                std::uint64_t index = 0;
                for (auto p : atom.pattern)
                    index = index * m + values[p];
                if (! order_.leq[std::size_t(atom.label)][std::size_t(target_[atom.symbol][index])])
                    return false;
            }
            return true;
        }

        auto nary_allows(const NaryKind & kind, const Element * values) const -> bool
        {
            if (! kind.table.empty()) {
                std::uint64_t index = 0;
                for (unsigned i = 0; i < kind.width; ++i)
                    index = index * m + values[i];
                return kind.table[index];
            }
            return allows(kind.atoms, values);
        }

    private:
        Order order_;
        std::vector<std::vector<Label>> target_;

        auto collect_constraints(const LStructure & g) -> void
        {
            std::map<std::vector<Element>, std::vector<Atom>> by_scope;
            std::vector<Element> scope;
            for (std::size_t r = 0; r < g.signature().size(); ++r) {
                auto arity = g.signature()[r].arity;
                auto labels = g.dense(r);
                std::uint64_t index = 0;
                for_each_tuple(n, arity, [&](const Tuple & t) {
                    auto label = labels[index++];
                    if (order_.bottom[std::size_t(label)])
                        return;
                    scope.assign(t.begin(), t.end());
                    std::sort(scope.begin(), scope.end());
                    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
                    Atom atom{std::uint32_t(r), {}, label};
                    for (auto e : t)
                        atom.pattern.push_back(
                            std::uint8_t(std::lower_bound(scope.begin(), scope.end(), e) - scope.begin()));
                    by_scope[scope].push_back(std::move(atom));
                });
            }

            std::map<std::vector<Atom>, std::uint32_t> binary_ids, nary_ids;
            std::vector<Element> values(8);
            for (auto & [vars, atoms] : by_scope) {
                std::sort(atoms.begin(), atoms.end());
                atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
                if (vars.size() == 1)
                    filter_unary(vars[0], atoms);
                else if (vars.size() == 2) {
                    auto [it, fresh] = binary_ids.try_emplace(atoms, std::uint32_t(binary_tables.size()));
                    if (fresh)
                        binary_tables.push_back(build_binary(atoms));
                    if (binary_tables[it->second].fwd.empty())
                        continue;
                    adjacency[vars[0]].push_back({vars[1], it->second, true});
                    adjacency[vars[1]].push_back({vars[0], it->second, false});
                }
                else {
                    auto [it, fresh] = nary_ids.try_emplace(atoms, std::uint32_t(nary_kinds.size()));
                    if (fresh)
                        nary_kinds.push_back(build_nary(atoms, unsigned(vars.size())));
                    auto id = std::uint32_t(nary.size());
                    nary.push_back({vars, it->second});
                    for (auto v : vars)
                        nary_of[v].push_back(id);
                }
            }
        }

        auto filter_unary(Element x, const std::vector<Atom> & atoms) -> void
        {
            Element a[1];
            for (a[0] = 0; a[0] < m; ++a[0])
                if (! allows(atoms, a))
                    domains[x * words + a[0] / 64] &= ~(Word{1} << (a[0] % 64));
        }

        // An all-permissive constraint yields empty rows and is dropped by the caller.
        auto build_binary(const std::vector<Atom> & atoms) const -> BinaryTable
        {
            BinaryTable t;
            t.fwd.assign(m * words, 0);
            t.bwd.assign(m * words, 0);
            bool everything = true;
            Element v[2];
            for (v[0] = 0; v[0] < m; ++v[0])
                for (v[1] = 0; v[1] < m; ++v[1])
                    if (allows(atoms, v)) {
                        t.fwd[v[0] * words + v[1] / 64] |= Word{1} << (v[1] % 64);
                        t.bwd[v[1] * words + v[0] / 64] |= Word{1} << (v[0] % 64);
                    }
                    else
                        everything = false;
            if (everything) {
                t.fwd.clear();
                t.bwd.clear();
            }
            return t;
        }

        auto build_nary(const std::vector<Atom> & atoms, unsigned width) const -> NaryKind
        {
            NaryKind kind{atoms, width, {}};
            std::uint64_t entries = 1;
            for (unsigned i = 0; i < width && entries <= max_table_entries; ++i)
                entries *= m;
            if (entries > max_table_entries)
                return kind;
            kind.table.resize(entries);
            std::vector<Element> v(width, 0);
            for (std::uint64_t idx = 0; idx < entries; ++idx) {
                kind.table[idx] = allows(atoms, v.data());
                for (int p = int(width) - 1; p >= 0 && ++v[p] == m; --p)
                    v[p] = 0;
            }
            return kind;
        }

        auto apply_restrictions(const SolveOptions & options) -> void
        {
            for (auto [x, a] : options.pinned) {
                if (x >= n || a >= m)
                    throw ValidationError("pinned pair out of range");
                Word * d = &domains[x * words];
                bool keep = test_bit(d, a);
                std::fill(d, d + words, 0);
                if (keep)
                    d[a / 64] |= Word{1} << (a % 64);
            }
            for (auto [x, a] : options.forbidden) {
                if (x >= n || a >= m)
                    throw ValidationError("forbidden pair out of range");
                domains[x * words + a / 64] &= ~(Word{1} << (a % 64));
            }
        }
    };

    struct State
    {
        std::vector<Word> dom;
        std::vector<std::uint8_t> done;
        std::vector<Element> value;
    };

    struct Limits
    {
        std::uint64_t max_nodes;
        std::chrono::steady_clock::time_point deadline;
        bool has_deadline;
        std::atomic<std::uint64_t> nodes{0};
    };

    class Search
    {
    public:
        Search(const Model & model, Limits & limits, bool dynamic_order) :
            model_(model),
            limits_(limits),
            dynamic_(dynamic_order)
        {
        }

        // Propagates singletons already present in the initial domains.
        auto root(State & s) -> bool
        {
            s.dom = model_.domains;
            s.done.assign(model_.n, 0);
            s.value.assign(model_.n, 0);
            std::vector<Element> queue;
            for (Element x = 0; x < model_.n; ++x) {
                auto c = popcount(dom(s, x), model_.words);
                if (c == 0)
                    return false;
                if (c == 1) {
                    s.done[x] = 1;
                    queue.push_back(x);
                }
            }
            return propagate(s, queue);
        }

        auto assign(State & s, Element x, Element a) -> bool
        {
            count_node();
            Word * d = dom(s, x);
            std::fill(d, d + model_.words, 0);
            d[a / 64] = Word{1} << (a % 64);
            s.done[x] = 1;
            std::vector<Element> queue{x};
            return propagate(s, queue);
        }

        // Returns the next variable to branch on, or n when everything is assigned.
        auto choose(const State & s) const -> Element
        {
            Element best = Element(model_.n);
            std::size_t best_size = 0;
            for (Element x = 0; x < model_.n; ++x) {
                if (s.done[x])
                    continue;
                if (! dynamic_)
                    return x;
                auto c = popcount(dom(s, x), model_.words);
                if (best == model_.n || c < best_size) {
                    best = x;
                    best_size = c;
                }
            }
            return best;
        }

        // Depth-first search from a propagated state. `visit` returns false to stop;
        // `abort` is polled between nodes. Returns false when stopped.
        template <typename Visit, typename Abort>
        auto dfs(const State & s, Visit && visit, Abort && abort) -> bool
        {
            auto x = choose(s);
            if (x == model_.n)
                return visit(s.value);
            const Word * d = dom(s, x);
            for (std::size_t a = first_bit(d, model_.words); a < model_.m; ++a) {
                if (! test_bit(d, a))
                    continue;
                if (abort())
                    return false;
                State child = s;
                if (assign(child, x, Element(a)))
                    if (! dfs(child, visit, abort))
                        return false;
            }
            return true;
        }

    private:
        const Model & model_;
        Limits & limits_;
        bool dynamic_;

        auto dom(State & s, Element x) const -> Word * { return &s.dom[x * model_.words]; }
        auto dom(const State & s, Element x) const -> const Word * { return &s.dom[x * model_.words]; }

        auto count_node() -> void
        {
            auto count = ++limits_.nodes;
            if (limits_.max_nodes && count > limits_.max_nodes)
                throw ResourceLimitError("search node limit of " + std::to_string(limits_.max_nodes) + " exceeded");
            if (limits_.has_deadline && (count & 255) == 0 && std::chrono::steady_clock::now() > limits_.deadline)
                throw ResourceLimitError("search timeout exceeded");
        }

        auto propagate(State & s, std::vector<Element> & queue) -> bool
        {
            const auto words = model_.words;
            std::vector<Element> values;
            while (! queue.empty()) {
                auto v = queue.back();
                queue.pop_back();
                auto val = Element(first_bit(dom(s, v), words));
                s.value[v] = val;

                for (auto & nb : model_.adjacency[v]) {
                    auto & table = model_.binary_tables[nb.table];
                    const Word * row = nb.first ? &table.fwd[val * words] : &table.bwd[val * words];
                    Word * d = dom(s, nb.other);
                    Word any = 0;
                    for (std::size_t i = 0; i < words; ++i)
                        any |= (d[i] &= row[i]);
                    if (! any)
                        return false;
                    if (! s.done[nb.other] && popcount(d, words) == 1) {
                        s.done[nb.other] = 1;
                        queue.push_back(nb.other);
                    }
                }

                for (auto id : model_.nary_of[v]) {
                    auto & c = model_.nary[id];
                    auto & kind = model_.nary_kinds[c.kind];
                    values.resize(c.scope.size());
                    int open = -1, open_count = 0;
                    for (std::size_t i = 0; i < c.scope.size(); ++i) {
                        const Word * d = dom(s, c.scope[i]);
                        if (popcount(d, words) == 1)
                            values[i] = Element(first_bit(d, words));
                        else {
                            open = int(i);
                            ++open_count;
                        }
                    }
                    if (open_count == 0) {
                        if (! model_.nary_allows(kind, values.data()))
                            return false;
                    }
                    else if (open_count == 1) {
                        auto z = c.scope[open];
                        Word * d = dom(s, z);
                        for (std::size_t a = 0; a < model_.m; ++a) {
                            if (! test_bit(d, a))
                                continue;
                            values[open] = Element(a);
                            if (! model_.nary_allows(kind, values.data()))
                                d[a / 64] &= ~(Word{1} << (a % 64));
                        }
                        auto left = popcount(d, words);
                        if (left == 0)
                            return false;
                        if (left == 1 && ! s.done[z]) {
                            s.done[z] = 1;
                            queue.push_back(z);
                        }
                    }
                }
            }
            return true;
        }
    };

    auto make_limits(const SolveOptions & options) -> Limits
    {
        return Limits{options.max_nodes, std::chrono::steady_clock::now() + options.timeout,
            options.timeout.count() > 0, {}};
    }
}

auto check_comparable(const LStructure & g, const LStructure & h) -> Category
{
    if (g.signature() != h.signature())
        throw ValidationError("signature mismatch: '" + g.signature().to_string() + "' vs '" +
            h.signature().to_string() + "'");
    return comparison_category(g.category(), h.category());
}

auto is_homomorphism(const LStructure & g, const LStructure & h, const HomMap & map) -> bool
{
    auto cat = check_comparable(g, h);
    if (map.image.size() != g.size() || map.target_size != h.size())
        throw ValidationError("map does not go from a domain of size " + std::to_string(g.size()) +
            " to one of size " + std::to_string(h.size()));
    for (auto e : map.image)
        if (e >= h.size())
            throw ValidationError("map image " + std::to_string(e) + " outside target domain");

    Tuple image;
    for (std::size_t r = 0; r < g.signature().size(); ++r) {
        bool ok = true;
        for_each_tuple(g.size(), g.signature()[r].arity, [&](const Tuple & t) {
            if (! ok)
                return;
            image.resize(t.size());
            for (std::size_t i = 0; i < t.size(); ++i)
                image[i] = map.image[t[i]];
            ok = label_leq(g.get_label(r, t), h.get_label(r, image), cat);
        });
        if (! ok)
            return false;
    }
    return true;
}

auto find_homomorphism(const LStructure & g, const LStructure & h, const SolveOptions & options)
    -> std::optional<HomMap>
{
    Model model(g, h, options);
    if (model.infeasible)
        return std::nullopt;
    if (model.n == 0)
        return HomMap{h.size(), {}};

    auto limits = make_limits(options);
    Search search(model, limits, true);
    State root;
    if (! search.root(root))
        return std::nullopt;

    auto x = search.choose(root);
    if (x == model.n)
        return HomMap{h.size(), root.value};

    std::vector<Element> values;
    for (std::size_t a = 0; a < model.m; ++a)
        if ((root.dom[x * model.words + a / 64] >> (a % 64)) & 1U)
            values.push_back(Element(a));

    // Each first-level branch is searched exactly as the sequential search would;
    // the witness comes from the lowest branch that has one.
    std::vector<std::optional<std::vector<Element>>> results(values.size());
    std::atomic<std::size_t> next{0}, best{values.size()};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            Search local(model, limits, true);
            while (true) {
                auto i = next++;
                if (i >= values.size() || i > best.load())
                    return;
                State child = root;
                if (! local.assign(child, x, values[i]))
                    continue;
                local.dfs(
                    child,
                    [&](const std::vector<Element> & image) {
                        results[i] = image;
                        auto current = best.load();
                        while (i < current && ! best.compare_exchange_weak(current, i)) {
                        }
                        return false;
                    },
                    [&] { return best.load() < i; });
            }
        }
        catch (...) {
            std::lock_guard lock(failure_mutex);
            if (! failure)
                failure = std::current_exception();
            best = 0;
        }
    };

    auto jobs = std::max(1U, std::min<unsigned>(options.jobs, unsigned(values.size())));
    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    for (auto & r : results)
        if (r)
            return HomMap{h.size(), *r};
    return std::nullopt;
}

auto enumerate_homomorphisms(const LStructure & g, const LStructure & h,
    const std::function<bool(const HomMap &)> & visit, const SolveOptions & options) -> std::uint64_t
{
    Model model(g, h, options);
    if (model.infeasible)
        return 0;
    if (model.n == 0)
        return visit(HomMap{h.size(), {}}), 1;

    auto limits = make_limits(options);
    Search search(model, limits, false);
    State root;
    if (! search.root(root))
        return 0;

    std::uint64_t count = 0;
    HomMap current{h.size(), {}};
    search.dfs(
        root,
        [&](const std::vector<Element> & image) {
            ++count;
            current.image = image;
            return visit(current);
        },
        [] { return false; });
    return count;
}

auto all_homomorphisms(const LStructure & g, const LStructure & h, const SolveOptions & options)
    -> std::vector<HomMap>
{
    std::vector<HomMap> out;
    enumerate_homomorphisms(
        g, h,
        [&](const HomMap & m) {
            out.push_back(m);
            return true;
        },
        options);
    return out;
}

auto hom_exists_bruteforce(const LStructure & g, const LStructure & h, std::uint64_t max_maps) -> bool
{
    auto cat = check_comparable(g, h);
    const std::size_t n = g.size(), m = h.size();
    if (n == 0)
        return true;
    if (m == 0)
        return false;

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > max_maps / m)
            throw ResourceLimitError("brute force would try more than " + std::to_string(max_maps) + " maps");
        total *= m;
    }

    std::vector<std::vector<Label>> source, target;
    for (std::size_t r = 0; r < g.signature().size(); ++r) {
        source.push_back(g.dense(r));
        target.push_back(h.dense(r));
    }

    std::vector<Element> map(n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t r = 0; r < source.size() && ok; ++r) {
            auto arity = g.signature()[r].arity;
            std::uint64_t index = 0;
            for_each_tuple(n, arity, [&](const Tuple & t) {
                if (ok) {
                    std::uint64_t image = 0;
                    for (auto e : t)
                        image = image * m + map[e];
                    ok = label_leq(source[r][index], target[r][image], cat);
                }
                ++index;
            });
        }
        if (ok)
            return true;

        std::size_t pos = n;
        while (pos > 0 && ++map[pos - 1] == m)
            map[--pos] = 0;
        if (pos == 0)
            return false;
    }
}

auto compose(const HomMap & first, const HomMap & second) -> HomMap
{
    if (first.target_size != second.image.size())
        throw ValidationError("maps cannot be composed");
    HomMap out{second.target_size, {}};
    for (auto e : first.image)
        out.image.push_back(second.image[e]);
    return out;
}

auto is_surjective(const HomMap & map) -> bool
{
    std::vector<bool> hit(map.target_size, false);
    for (auto e : map.image)
        hit[e] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

auto is_injective(const HomMap & map) -> bool
{
    std::vector<bool> hit(map.target_size, false);
    for (auto e : map.image) {
        if (hit[e])
            return false;
        hit[e] = true;
    }
    return true;
}

}
