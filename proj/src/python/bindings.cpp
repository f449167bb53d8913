#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycov/cli.hpp"
#include "cycov/conemetrics.hpp"
#include "cycov/covers.hpp"
#include "cycov/wronski.hpp"

namespace py = pybind11;
using namespace cycov;

namespace {

BranchingData cover(long d, const Indices& idx) { return BranchingData::make(d, idx); }

py::dict wronski_dict(long d, const Indices& idx)
{
    const auto b = cover(d, idx);
    const auto r = wronskian(b, default_basis(b), default_punctures(b.n()));
    std::vector<std::string> bs;
    for (const auto& x : r.b) bs.push_back(x.str());
    py::dict out;
    out["genus"] = r.genus;
    out["w1"] = r.w1.str();
    out["b"] = bs;
    out["weights"] = r.weights;
    out["infinity_weight"] = r.infinity_weight;
    out["total_weight"] = total_weight(r, b, r.genus);
    out["hyperelliptic"] = hyperelliptic_test(r, r.genus);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Cyclically branched covers of punctured spheres";

    py::register_exception<Error>(m, "CycovError", PyExc_ValueError);

    m.def("validate", [](long d, const Indices& idx) {
        const auto v = validate(d, idx);
        std::vector<std::string> msgs;
        for (const auto& x : v.violations) msgs.push_back(x.message);
        return py::make_tuple(v.ok(), msgs);
    }, py::arg("d"), py::arg("indices"), "Returns (ok, violation messages).");

    m.def("genus", [](long d, const Indices& idx) { return genus(cover(d, idx)); }, py::arg("d"), py::arg("indices"));
    m.def("genus_oracle", [](long d, const Indices& idx) { return genus_oracle(cover(d, idx)); }, py::arg("d"),
          py::arg("indices"));

    m.def("normalize", [](long d, const Indices& idx, bool multiset) {
        return normalize(cover(d, idx), multiset ? Equivalence::Multiset : Equivalence::Dihedral).indices();
    }, py::arg("d"), py::arg("indices"), py::arg("multiset") = false);

    m.def("enumerate", [](long max_genus, long min_genus, std::optional<long> punctures, bool multiset) {
        std::vector<std::tuple<long, Indices, long>> out;
        for (const auto& c :
             enumerate({max_genus, min_genus, punctures, multiset ? Equivalence::Multiset : Equivalence::Dihedral}))
            out.emplace_back(c.cover.d(), c.cover.indices(), c.genus);
        return out;
    }, py::arg("max_genus"), py::arg("min_genus") = 2, py::arg("punctures") = py::none(), py::arg("multiset") = false,
          "List of (d, indices, genus) sorted by genus, n, d, indices.");

    m.def("admissible", [](long d, const Indices& idx) {
        std::vector<std::pair<long, std::vector<long>>> out;
        for (const auto& c : all_admissible(cover(d, idx))) out.emplace_back(c.mu, c.a);
        return out;
    }, py::arg("d"), py::arg("indices"), "List of (mu, a).");

    m.def("wronski", &wronski_dict, py::arg("d"), py::arg("indices"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Returns (exit code, stdout, stderr).");
}
