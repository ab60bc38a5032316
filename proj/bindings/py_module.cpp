#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "harmseq/construct.hpp"
#include "harmseq/errors.hpp"
#include "harmseq/group.hpp"
#include "harmseq/groupspec.hpp"
#include "harmseq/intseq.hpp"
#include "harmseq/search.hpp"
#include "harmseq/table_io.hpp"
#include "harmseq/verify.hpp"

namespace py = pybind11;
using namespace harmseq;

namespace {

// The C++ side hands out shared_ptr<const FiniteGroup>; pybind11 wants a
// mutable holder, so the Python class is a thin value wrapper.
struct PyGroup {
    GroupPtr g;
    const FiniteGroup& ref() const { return *g; }
};

py::dict outcome_dict(const SearchOutcome& o) {
    py::dict d;
    d["status"] = std::string(to_string(o.status));
    d["nodes_explored"] = o.nodes_explored;
    d["budget"] = o.budget;
    if (o.status == SearchStatus::Found) {
        d["sequence"] = o.sequence;
        if (!o.sequence_r.empty()) d["sequence_r"] = o.sequence_r;
    }
    return d;
}

py::dict report_dict(const StrategyReport& r) {
    py::dict d;
    d["strategy"] = r.strategy;
    d["witnesses"] = r.witnesses;
    d["attempts"] = r.attempts;
    d["certified"] = r.certified;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Harmonious and R-harmonious sequences in finite groups";

    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);

    py::class_<PyGroup>(m, "Group")
        .def_property_readonly("order", [](const PyGroup& g) { return g.ref().order(); })
        .def("mul", [](const PyGroup& g, int a, int b) {
            g.ref().check_index(a);
            g.ref().check_index(b);
            return g.ref().mul(a, b);
        })
        .def("inv", [](const PyGroup& g, int a) {
            g.ref().check_index(a);
            return g.ref().inv(a);
        })
        .def("power", [](const PyGroup& g, int a, long long e) { return g.ref().power(a, e); })
        .def("element_order", [](const PyGroup& g, int a) { return g.ref().element_order(a); })
        .def("is_abelian", [](const PyGroup& g) { return g.ref().is_abelian(); })
        .def("name", [](const PyGroup& g, int a) {
            g.ref().check_index(a);
            return g.ref().name(a);
        })
        .def_property_readonly("names", [](const PyGroup& g) { return g.ref().names(); })
        .def("index_of",
             [](const PyGroup& g, const std::string& tok) { return g.ref().index_of(tok); })
        .def("__len__", [](const PyGroup& g) { return g.ref().order(); })
        .def("__repr__", [](const PyGroup& g) {
            return "<Group of order " + std::to_string(g.ref().order()) + ">";
        });

    m.def("group", [](const std::string& spec) {
        return PyGroup{realize_group(parse_group_spec(spec))};
    }, py::arg("spec"), "Build a group from a spec string such as 'Z9', 'D12' or 'SD(Z3;Z7;2)'");
    m.def("make_cyclic", [](int n) { return PyGroup{make_cyclic(n)}; });
    m.def("make_dihedral", [](int order) { return PyGroup{make_dihedral(order)}; });
    m.def("make_direct_product", [](const PyGroup& a, const PyGroup& b) {
        return PyGroup{make_direct_product(a.g, b.g)};
    });
    m.def("make_semidirect_cyclic",
          [](const std::vector<int>& k_orders, int h_order, const std::vector<long long>& mult) {
              return PyGroup{make_semidirect_cyclic(k_orders, h_order, mult)};
          }, py::arg("k_orders"), py::arg("h_order"), py::arg("multipliers"));
    m.def("load_table", [](const std::string& path) { return PyGroup{load_cayley_table_file(path)}; });
    m.def("load_table_text", [](const std::string& text) {
        std::istringstream in(text);
        return PyGroup{load_cayley_table(in)};
    });

    m.def("hall_paige_check",
          [](const PyGroup& g) { return std::string(to_string(hall_paige_check(g.g))); });
    m.def("abelian_basis", [](const PyGroup& g) { return abelian_basis(g.g); });

    // integer sequences
    m.def("build_k", &intseq::build_k, py::arg("n"));
    m.def("sigma", &intseq::sigma_map, py::arg("n"), py::arg("j"));
    m.def("build_matched", [](long long n) {
        auto p = intseq::build_matched(n);
        return py::make_tuple(p.k, p.k_prime);
    });
    m.def("verify_harmonious_int", &intseq::verify_harmonious_int, py::arg("k"), py::arg("n"));
    m.def("verify_matched_int", [](long long n, const intseq::Seq& k, const intseq::Seq& kp) {
        intseq::MatchedIntPair p{n, k, kp};
        std::string why;
        bool ok = intseq::verify_matched_int(p, &why);
        return py::make_tuple(ok, why);
    });

    // predicates
    m.def("consecutive_products", [](const PyGroup& g, const std::vector<int>& seq) {
        return consecutive_products(g.ref(), seq);
    });
    m.def("is_harmonious", [](const PyGroup& g, const std::vector<int>& seq) {
        return is_harmonious(g.ref(), seq);
    });
    m.def("is_r_harmonious", [](const PyGroup& g, const std::vector<int>& seq) {
        return is_r_harmonious(g.ref(), seq);
    });
    m.def("is_symmetric_harmonious", [](const PyGroup& g, const std::vector<int>& seq) {
        return is_symmetric_harmonious(g.ref(), seq);
    });
    m.def("is_matched_pair",
          [](const PyGroup& g, const std::vector<int>& h, const std::vector<int>& r) {
              return is_matched_pair(g.ref(), h, r);
          });

    // constructions
    m.def("symmetric_harmonious", [](const PyGroup& g, unsigned long long budget) {
        return symmetric_harmonious(g.g, budget).items;
    }, py::arg("group"), py::arg("budget") = kDefaultBudget);
    m.def("mext", [](const PyGroup& g, const std::vector<int>& h_members,
                     std::optional<int> x, unsigned long long budget) {
        auto pair = mext(g.g, Subgroup{g.g, h_members}, x, budget);
        return py::make_tuple(pair.h_seq, pair.r_seq);
    }, py::arg("group"), py::arg("h_members"), py::arg("x") = std::nullopt,
       py::arg("budget") = kDefaultBudget);
    m.def("matched_pair", [](const PyGroup& g, unsigned long long budget) {
        auto r = matched_pair(g.g, budget);
        py::dict d;
        d["status"] = std::string(to_string(r.status));
        d["report"] = report_dict(r.report);
        if (r.pair) {
            d["h_seq"] = r.pair->h_seq;
            d["r_seq"] = r.pair->r_seq;
        }
        return d;
    }, py::arg("group"), py::arg("budget") = kDefaultBudget);
    m.def("r_harmonious", [](const PyGroup& g, unsigned long long budget) {
        auto r = r_harmonious(g.g, budget);
        py::dict d;
        d["status"] = std::string(to_string(r.status));
        d["report"] = report_dict(r.report);
        if (r.seq) d["sequence"] = r.seq->items;
        return d;
    }, py::arg("group"), py::arg("budget") = kDefaultBudget);

    // exhaustive searches
    m.def("search_harmonious", [](const PyGroup& g, unsigned long long budget, int workers) {
        return outcome_dict(search_harmonious(g.g, budget, workers));
    }, py::arg("group"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
    m.def("search_r_harmonious", [](const PyGroup& g, unsigned long long budget, int workers) {
        return outcome_dict(search_r_harmonious(g.g, budget, workers));
    }, py::arg("group"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
    m.def("search_symmetric_harmonious",
          [](const PyGroup& g, unsigned long long budget, int workers) {
              return outcome_dict(search_symmetric_harmonious(g.g, budget, workers));
          }, py::arg("group"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
    m.def("search_matched", [](const PyGroup& g, unsigned long long budget, int workers) {
        return outcome_dict(search_matched(g.g, budget, workers));
    }, py::arg("group"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
}
