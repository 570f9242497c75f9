#include <mpart/arity.hh>
#include <mpart/blowup.hh>
#include <mpart/canonical.hh>
#include <mpart/cli.hh>
#include <mpart/encodings.hh>
#include <mpart/error.hh>
#include <mpart/hadamard.hh>
#include <mpart/homomorphism.hh>
#include <mpart/mps.hh>
#include <mpart/obstructions.hh>
#include <mpart/satgadget.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mpart;

namespace {
    auto options(std::uint64_t max_nodes, double timeout_secs, unsigned jobs) -> SolveOptions
    {
        SolveOptions o;
        o.max_nodes = max_nodes;
        o.timeout = std::chrono::milliseconds(std::int64_t(timeout_secs * 1000));
        o.jobs = jobs;
        return o;
    }

    auto image(const std::optional<HomMap> & m) -> std::optional<std::vector<Element>>
    {
        if (! m)
            return std::nullopt;
        return m->image;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Label structures, homomorphisms and the reductions between matrix partition problems";

    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const ValidationError & e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<LStructure>(m, "Structure")
        .def_static("parse", &parse_mps, py::arg("text"))
        .def("serialize", &serialize_mps)
        .def_property_readonly("size", &LStructure::size)
        .def_property_readonly("category", [](const LStructure & s) { return std::string(to_string(s.category())); })
        .def_property_readonly("signature", [](const LStructure & s) { return s.signature().to_string(); })
        .def("label", [](const LStructure & s, const std::string & symbol, const std::vector<Element> & tuple) {
            auto r = s.signature().index_of(symbol);
            if (! r)
                throw ValidationError("unknown symbol '" + symbol + "'");
            return std::string(1, to_char(s.get_label(*r, tuple)));
        })
        .def("__eq__", [](const LStructure & a, const LStructure & b) { return a == b; })
        .def("__repr__", [](const LStructure & s) {
            return "<Structure " + std::string(to_string(s.category())) + " " + s.signature().to_string() + " on " +
                std::to_string(s.size()) + " elements>";
        });

    m.def("find_homomorphism",
        [](const LStructure & g, const LStructure & h, std::uint64_t max_nodes, double timeout_secs, unsigned jobs) {
            return image(find_homomorphism(g, h, options(max_nodes, timeout_secs, jobs)));
        },
        py::arg("g"), py::arg("h"), py::arg("max_nodes") = 0, py::arg("timeout_secs") = 0.0, py::arg("jobs") = 1,
        "Image list of the first witness in the solver's order, or None.");
    m.def("all_homomorphisms", [](const LStructure & g, const LStructure & h) {
        std::vector<std::vector<Element>> out;
        for (auto & map : all_homomorphisms(g, h))
            out.push_back(map.image);
        return out;
    });
    m.def("is_homomorphism", [](const LStructure & g, const LStructure & h, const std::vector<Element> & image) {
        return is_homomorphism(g, h, HomMap{h.size(), image});
    });
    m.def("hom_exists_bruteforce", &hom_exists_bruteforce, py::arg("g"), py::arg("h"),
        py::arg("max_maps") = default_bruteforce_cap);

    m.def("canonical_form", &canonical_form);
    m.def("is_isomorphic", &is_isomorphic);
    m.def("is_core", [](const LStructure & s) { return is_core(s); });
    m.def("core_of", [](const LStructure & s) { return core_of(s); });
    m.def("is_trivial_target", &is_trivial_target);

    m.def("to_csp", &to_csp);
    m.def("from_csp", &from_csp);

    m.def("sylvester", [](unsigned k) {
        auto h = sylvester(k);
        std::vector<std::vector<int>> rows(h.order(), std::vector<int>(h.order()));
        for (std::size_t i = 0; i < h.order(); ++i)
            for (std::size_t j = 0; j < h.order(); ++j)
                rows[i][j] = h.at(i, j);
        return rows;
    });
    m.def("verify_hadamard", [](const std::vector<std::vector<int>> & rows) {
        std::vector<std::int8_t> entries;
        for (auto & row : rows) {
            if (row.size() != rows.size())
                throw ValidationError("matrix must be square");
            for (auto v : row) {
                if (v != 1 && v != -1)
                    throw ValidationError("entries must be +1 or -1");
                entries.push_back(std::int8_t(v));
            }
        }
        return verify_hadamard(HadamardMatrix(rows.size(), std::move(entries)));
    });

    m.def("block_size", &block_size);
    m.def("star_to_01", [](const LStructure & g, std::size_t target_size) {
        auto r = star_to_01(g, target_size);
        return py::make_tuple(r.structure, r.block_size, r.projection.image);
    });

    m.def("pack", &pack_structure);
    m.def("unpack", [](const LStructure & packed, const std::string & base) -> py::object {
        auto r = unpack_instance(packed, Signature::parse(base));
        if (auto * s = std::get_if<LStructure>(&r))
            return py::cast(*s);
        auto & no = std::get<NoCertificate>(r);
        return py::make_tuple(std::string(to_string(no.reason)), no.detail);
    }, "The unpacked structure, or a (reason, detail) tuple when no certificate exists.");
    m.def("binary_to_many_target", [](const LStructure & g, const std::string & sigma) {
        return binary_to_many_target(g, Signature::parse(sigma));
    });
    m.def("binary_to_many_instance", [](const LStructure & g, const std::string & sigma) {
        return binary_to_many_instance(g, Signature::parse(sigma));
    });
    m.def("many_to_binary_instance", &many_to_binary_instance);

    m.def("odd_cycle_empty", &odd_cycle_empty);
    m.def("is_inclusion_minimal_obstruction",
        [](const LStructure & g, const LStructure & h) { return is_inclusion_minimal_obstruction(g, h); });
    m.def("is_hom_minimal_obstruction", [](const LStructure & g, const LStructure & h, std::size_t bound) {
        return is_hom_minimal_obstruction(g, h, bound);
    });
    m.def("obstructions",
        [](const LStructure & h, const std::string & cat, std::size_t max_size, const std::string & mode,
            std::size_t universe_bound) {
            auto c = category_from_string(cat);
            if (! c)
                throw ValidationError("unknown category '" + cat + "'");
            if (mode == "inc")
                return inclusion_minimal_obstructions(h, *c, max_size).members;
            if (mode == "hom")
                return hom_minimal_obstructions(h, *c, max_size, universe_bound ? universe_bound : max_size).members;
            throw ValidationError("mode must be 'inc' or 'hom'");
        },
        py::arg("h"), py::arg("category"), py::arg("max_size"), py::arg("mode") = "inc", py::arg("universe_bound") = 0,
        "Sorted canonical forms of the members.");
    m.def("structure_from_canonical_form", &structure_from_canonical_form);

    m.def("verify_reduction", [](const std::string & dimacs) {
        auto cnf = parse_dimacs(dimacs);
        auto r = verify_reduction(cnf);
        py::dict d;
        d["sat"] = r.sat;
        d["hom"] = r.hom;
        d["passed"] = r.passed();
        d["tree_size"] = r.tree_size;
        d["target_size"] = r.target_size;
        d["report"] = serialize_reduction_report(cnf, r);
        return d;
    });

    m.def("run_cli", [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = run_cli(std::move(args), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Runs one command line in-process and returns (exit code, stdout, stderr).");
}
