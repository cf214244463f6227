// Python bindings for the main operations.  Bicompositions, monomials, and
// permutations cross the boundary as their text forms; exact rationals become
// fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dqsym/action.hpp"
#include "dqsym/dnsym.hpp"
#include "dqsym/dqsym.hpp"
#include "dqsym/quotient.hpp"
#include "dqsym/symfun.hpp"
#include "dqsym/verify.hpp"

namespace py = pybind11;
using namespace dqsym;

namespace {

Bicomposition bc(const std::string& text) { return Bicomposition::parse(text); }

py::object to_fraction(const Rat& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::str(r.get_str()));
}

py::dict elt_dict(const DQSymElt& u) {
    py::dict out;
    for (const auto& [a, c] : u.terms()) out[py::str(a.str())] = to_fraction(c);
    return out;
}

py::dict hilbert_dict(const HilbertMatrix& m) {
    py::dict out;
    out["n"] = m.n;
    out["convention"] = "cartesian";
    py::list rows;
    for (const auto& row : m.display_rows()) {
        py::list r;
        for (unsigned long v : row) r.append(v);
        rows.append(r);
    }
    out["rows"] = rows;
    py::list bidegrees;
    for (const auto& [d, v] : m.entries)
        bidegrees.append(py::make_tuple(d.first, d.second, v));
    out["bidegrees"] = bidegrees;
    return out;
}

py::list series_list(const UnivariateSeries& s, unsigned upto) {
    py::list out;
    for (unsigned k = 0; k <= upto; ++k) out.append(to_fraction(s.coeff(k)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "diagonal quasi-symmetric functions and Temperley-Lieb harmonics";

    // bicomposition combinatorics
    m.def("bidegree", [](const std::string& a) { return bc(a).bidegree(); }, py::arg("a"));
    m.def("collapse", [](const std::string& a) { return bc(a).collapse(); }, py::arg("a"));
    m.def(
        "quasi_shuffle",
        [](const std::string& a, const std::string& b) {
            py::list out;
            for (const Bicomposition& c : quasi_shuffle(bc(a), bc(b))) out.append(c.str());
            return out;
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "quasi_shuffle_counted",
        [](const std::string& a, const std::string& b) {
            py::dict out;
            for (const auto& [c, ways] : quasi_shuffle_counted(bc(a), bc(b)))
                out[py::str(c.str())] = ways;
            return out;
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "refinements",
        [](const std::string& b) {
            py::list out;
            for (const Bicomposition& a : refinements(bc(b))) out.append(a.str());
            return out;
        },
        py::arg("b"));
    m.def(
        "order_leq",
        [](const std::string& a, const std::string& b) { return order_leq(bc(a), bc(b)); },
        py::arg("a"), py::arg("b"));
    m.def("is_lyndon", [](const std::string& a) { return is_lyndon(bc(a)); }, py::arg("a"));
    m.def(
        "lyndon_list",
        [](unsigned d1, unsigned d2) {
            py::list out;
            for (const Bicomposition& a : lyndon_list({d1, d2})) out.append(a.str());
            return out;
        },
        py::arg("d1"), py::arg("d2"));
    m.def(
        "enumerate_bicompositions",
        [](unsigned d1, unsigned d2, std::size_t maxlen) {
            py::list out;
            for (const Bicomposition& a : enumerate_bicompositions({d1, d2}, maxlen))
                out.append(a.str());
            return out;
        },
        py::arg("d1"), py::arg("d2"), py::arg("maxlen"));

    // the algebra and its dual
    m.def(
        "m_mult",
        [](const std::string& a, const std::string& b) {
            return elt_dict(m_mult(bc(a), bc(b)));
        },
        py::arg("a"), py::arg("b"));
    m.def("f_basis", [](const std::string& b) { return elt_dict(f_basis(bc(b))); },
          py::arg("b"));
    m.def(
        "m_expand",
        [](const std::string& a, unsigned n) { return m_expand(bc(a), n).str(); },
        py::arg("a"), py::arg("n"));
    m.def(
        "pairing",
        [](const std::string& h_word, const std::string& m_index) {
            return to_fraction(
                pairing(DNSymElt::word(bc(h_word)), DQSymElt::basis(bc(m_index))));
        },
        py::arg("h_word"), py::arg("m_index"));
    m.def(
        "duality_check",
        [](const std::string& a, const std::string& b, const std::string& c) {
            return duality_check(bc(a), bc(b), bc(c));
        },
        py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "lyndon_freeness_check",
        [](unsigned d1, unsigned d2) { return lyndon_freeness_check({d1, d2}); },
        py::arg("d1"), py::arg("d2"));

    // actions
    m.def(
        "hivert_trace",
        [](const std::string& sigma, unsigned n, unsigned d1, unsigned d2) {
            return hivert_trace(Permutation::parse(sigma), n, {d1, d2});
        },
        py::arg("sigma"), py::arg("n"), py::arg("d1"), py::arg("d2"));

    // quotients and series
    m.def(
        "hilbert_dq", [](unsigned n) { return hilbert_dict(hilbert_dq(n)); }, py::arg("n"));
    m.def(
        "predicted_dq", [](unsigned n) { return hilbert_dict(predicted_dq(n)); },
        py::arg("n"));
    m.def(
        "hilbert_r_diag",
        [](unsigned n, unsigned d1, unsigned d2, unsigned total_cap, unsigned gen_maxdeg) {
            return hilbert_dict(hilbert_r_diag(n, {d1, d2}, total_cap, gen_maxdeg));
        },
        py::arg("n"), py::arg("d1"), py::arg("d2"), py::arg("total_cap") = ~0u,
        py::arg("gen_maxdeg") = 0);
    m.def(
        "hilbert_q",
        [](unsigned n) {
            const UnivariateSeries s = hilbert_q(n);
            return series_list(s, s.degree());
        },
        py::arg("n"));
    m.def(
        "psi",
        [](unsigned n) {
            const UnivariateSeries s = psi(n);
            return series_list(s, s.degree());
        },
        py::arg("n"));
    m.def(
        "hilbert_r_closed_form",
        [](unsigned n, unsigned truncation) {
            return series_list(hilbert_r_closed_form(n, truncation), truncation);
        },
        py::arg("n"), py::arg("truncation"));
    m.def(
        "hilbert_r_univariate",
        [](unsigned n) {
            const UnivariateSeries s = hilbert_r_univariate(n);
            return series_list(s, s.degree());
        },
        py::arg("n"));
    m.def(
        "plethystic_guess",
        [](unsigned n, unsigned t1, unsigned t2) {
            const BivariateSeries s = plethystic_guess(n, {t1, t2});
            py::dict out;
            for (unsigned i = 0; i <= t1; ++i)
                for (unsigned j = 0; j <= t2; ++j)
                    if (s.coeff(i, j) != 0)
                        out[py::make_tuple(i, j)] = to_fraction(s.coeff(i, j));
            return out;
        },
        py::arg("n"), py::arg("t1"), py::arg("t2"));
    m.def(
        "harmonics_basis",
        [](unsigned n, unsigned d1, unsigned d2) {
            py::list out;
            for (const Polynomial& h : harmonics_basis(n, {d1, d2})) out.append(h.str());
            return out;
        },
        py::arg("n"), py::arg("d1"), py::arg("d2"));
    m.def(
        "conjectured_basis",
        [](unsigned n) {
            py::dict out;
            for (const auto& [d, monos] : conjectured_basis(n)) {
                py::list cell;
                for (const Monomial& mm : monos) cell.append(mm.str());
                out[py::make_tuple(d.first, d.second)] = cell;
            }
            return out;
        },
        py::arg("n"));
    m.def("basis_check", [](unsigned n) { return basis_check(n); }, py::arg("n"));

    // verification suites
    auto as_pair = [](const CheckResult& r) { return py::make_tuple(r.pass, r.witness); };
    m.def("verify_kernel", [as_pair](unsigned n) { return as_pair(verify_kernel(n)); },
          py::arg("nmax"));
    m.def("verify_duality", [as_pair](unsigned b) { return as_pair(verify_duality(b)); },
          py::arg("bound"));
    m.def("verify_frobenius", [as_pair](unsigned n) { return as_pair(verify_frobenius(n)); },
          py::arg("nmax"));
    m.def("verify_lyndon", [as_pair](unsigned b) { return as_pair(verify_lyndon(b)); },
          py::arg("bound"));
    m.def("verify_basis", [as_pair](unsigned n) { return as_pair(verify_basis(n)); },
          py::arg("n"));
    m.def("verify_hopf", [as_pair](unsigned b) { return as_pair(verify_hopf(b)); },
          py::arg("bound"));
}
