#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chipfire/arith.hpp"
#include "chipfire/critgrp.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/exactla.hpp"
#include "chipfire/randomlab.hpp"

namespace py = pybind11;
using namespace chipfire;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

py::list to_py(const std::vector<BigInt>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const IntegerMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
        rows.append(row);
    }
    return rows;
}

IntegerMatrix matrix_from_py(const py::sequence& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? py::len(rows[0]) : 0;
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row = rows[i];
        if (row.size() != c) throw DomainError("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = from_py(row[j]);
    }
    return m;
}

py::tuple to_py(const Rational& q) { return py::make_tuple(to_py(BigInt(q.get_num())), to_py(BigInt(q.get_den()))); }

Divisor divisor_arg(const Multigraph& g, const py::object& d) {
    if (py::isinstance<py::str>(d)) return parse_divisor(g, d.cast<std::string>());
    if (py::isinstance<py::dict>(d)) {
        Divisor out(g.size());
        for (auto [k, v] : d.cast<py::dict>()) out[g.index_of(k.cast<std::string>())] = v.cast<std::int64_t>();
        return out;
    }
    auto values = d.cast<std::vector<std::int64_t>>();
    if (values.size() != g.size()) throw DomainError("divisor length does not match the graph");
    return Divisor(values);
}

Vertex vertex_arg(const Multigraph& g, const py::object& v) {
    if (v.is_none()) return default_base(g);
    if (py::isinstance<py::str>(v)) return g.index_of(v.cast<std::string>());
    auto i = v.cast<std::size_t>();
    if (i >= g.size()) throw DomainError("vertex index out of range");
    return i;
}

py::list group_factors(const AbelianGroup& h) { return to_py(h.factors()); }

}  // namespace

PYBIND11_MODULE(_chipfire, m) {
    m.doc() = "Chip-firing, critical groups and arithmetical structures";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<GraphError> graph_error(m, "GraphError", PyExc_ValueError);
    static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    static py::exception<GuardError> guard_error(m, "GuardError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const GraphError& e) {
            py::set_error(graph_error, e.what());
        } catch (const DomainError& e) {
            py::set_error(domain_error, e.what());
        } catch (const GuardError& e) {
            py::set_error(guard_error, e.what());
        }
    });

    py::class_<Multigraph>(m, "Graph")
        .def(py::init<>())
        .def_static("parse", &parse_undirected, py::arg("text"))
        .def_static("family", &family::from_spec, py::arg("spec"))
        .def_property_readonly("labels", &Multigraph::labels)
        .def("__len__", &Multigraph::size)
        .def("add_vertex", &Multigraph::add_vertex)
        .def("add_edge",
             [](Multigraph& g, const std::string& u, const std::string& v, std::int64_t k) {
                 auto get = [&](const std::string& s) { return g.find(s) ? *g.find(s) : g.add_vertex(s); };
                 Vertex a = get(u), b = get(v);
                 g.add_edge(a, b, k);
             },
             py::arg("u"), py::arg("v"), py::arg("m") = 1)
        .def("mult",
             [](const Multigraph& g, const std::string& u, const std::string& v) {
                 return g.mult(g.index_of(u), g.index_of(v));
             })
        .def("edge_count", &Multigraph::edge_count)
        .def("is_connected", [](const Multigraph& g) { return is_connected(g); })
        .def("genus", [](const Multigraph& g) { return genus(g); })
        .def("laplacian", [](const Multigraph& g) { return to_py(laplacian(g)); })
        .def("to_text", [](const Multigraph& g) { return write_graph(g); })
        .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
        .def("__repr__", [](const Multigraph& g) {
            return "<Graph " + std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) + " edges>";
        });

    m.def("wedge", [](const Multigraph& a, const py::object& u, const Multigraph& b, const py::object& v) {
        return wedge(a, vertex_arg(a, u), b, vertex_arg(b, v));
    });
    m.def("subdivide", [](const Multigraph& g, std::size_t k) { return subdivide(g, k); });
    m.def("cone", &cone);

    m.def("smith_normal_form", [](const py::sequence& rows) {
        SNFResult s = smith_normal_form(matrix_from_py(rows));
        py::dict d;
        d["diag"] = to_py(s.diag);
        d["S"] = to_py(s.S);
        d["U"] = to_py(s.U);
        d["V"] = to_py(s.V);
        return d;
    });
    m.def("determinant", [](const py::sequence& rows) { return to_py(determinant(matrix_from_py(rows))); });

    m.def("critical_group", [](const Multigraph& g) { return group_factors(critical_group(g)); });
    m.def("group_string", [](const Multigraph& g) { return critical_group(g).to_string(); });
    m.def("spanning_tree_count", [](const Multigraph& g) { return to_py(spanning_tree_count(g)); });
    m.def("cokernel", [](const py::sequence& rows) {
        CokernelResult c = cokernel(matrix_from_py(rows));
        return py::make_tuple(c.free_rank, group_factors(c.torsion));
    });
    m.def("sylow", [](const std::vector<std::int64_t>& orders, std::int64_t p) {
        return group_factors(sylow(AbelianGroup::from_orders(orders), p));
    });

    m.def(
        "q_reduce",
        [](const Multigraph& g, const py::object& d, const py::object& q) {
            return q_reduce(g, divisor_arg(g, d), vertex_arg(g, q)).values;
        },
        py::arg("graph"), py::arg("divisor"), py::arg("q") = py::none());
    m.def(
        "is_q_reduced",
        [](const Multigraph& g, const py::object& d, const py::object& q) {
            return is_q_reduced(g, divisor_arg(g, d), vertex_arg(g, q));
        },
        py::arg("graph"), py::arg("divisor"), py::arg("q") = py::none());
    m.def("equivalent", [](const Multigraph& g, const py::object& a, const py::object& b) {
        return equivalent(g, divisor_arg(g, a), divisor_arg(g, b));
    });
    m.def("has_positive_rank",
          [](const Multigraph& g, const py::object& d) { return has_positive_rank(g, divisor_arg(g, d)); });
    m.def(
        "element_order",
        [](const Multigraph& g, const py::object& d, const py::object& q) {
            return to_py(element_order(g, divisor_arg(g, d), vertex_arg(g, q)));
        },
        py::arg("graph"), py::arg("divisor"), py::arg("q") = py::none());
    m.def("gonality", [](const Multigraph& g) {
        GonalityResult r = gonality(g);
        return py::make_tuple(r.gonality, r.witness.values);
    });
    m.def(
        "_pairing",
        [](const Multigraph& g, const py::object& a, const py::object& b, const py::object& q) {
            return to_py(monodromy_pairing(g, divisor_arg(g, a), divisor_arg(g, b), vertex_arg(g, q)).value);
        },
        py::arg("graph"), py::arg("d1"), py::arg("d2"), py::arg("q") = py::none());
    m.def(
        "q_reduced_degree0",
        [](const Multigraph& g, const py::object& q) {
            std::vector<std::vector<std::int64_t>> out;
            for (const auto& d : list_q_reduced_degree0(g, vertex_arg(g, q))) out.push_back(d.values);
            return out;
        },
        py::arg("graph"), py::arg("q") = py::none());

    m.def("arith_validate", [](const Multigraph& g, const std::vector<std::int64_t>& r) {
        arith::Structure s = arith::validate(g, r);
        return s.d;
    });
    m.def("arith_enumerate", [](const Multigraph& g, std::int64_t r_max) {
        std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> out;
        for (const auto& s : arith::enumerate(g, r_max).structures) out.emplace_back(s.r, s.d);
        return out;
    });
    m.def("arith_critical_group", [](const Multigraph& g, const std::vector<std::int64_t>& r) {
        return group_factors(arith::critical_group(g, arith::validate(g, r)));
    });

    m.def(
        "_run_experiment",
        [](std::size_t n, const std::string& q, std::size_t samples, std::uint64_t seed, std::int64_t p,
           unsigned jobs) {
            randomlab::ExperimentConfig c;
            c.n = n;
            c.q = randomlab::Probability::parse(q);
            c.samples = samples;
            c.seed = seed;
            c.p = p;
            c.jobs = jobs;
            std::string json;
            {
                py::gil_scoped_release release;
                json = randomlab::run_experiment(c).to_json();
            }
            return json;
        },
        py::arg("n"), py::arg("q"), py::arg("samples"), py::arg("seed"), py::arg("p"), py::arg("jobs"));
    m.def("wood_probability", [](const std::vector<std::int64_t>& orders, std::int64_t p) {
        return randomlab::wood_probability(AbelianGroup::from_orders(orders), p);
    });
    m.def("macwilliams_count", [](std::int64_t k, std::int64_t p) { return to_py(randomlab::macwilliams_count(k, p)); });
    m.def("cyclic_constant", &randomlab::cyclic_constant, py::arg("terms") = 10);
}
