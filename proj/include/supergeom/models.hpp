#ifndef SUPERGEOM_MODELS_HPP
#define SUPERGEOM_MODELS_HPP

#include <map>
#include <string>
#include <vector>

#include "supergeom/lsa.hpp"
#include "supergeom/vectorfield.hpp"

namespace sg {

// A concrete model: chart, distribution generators, annihilator forms,
// designated classical points and (data-only) expectations.
struct Model {
    std::string name;
    TablePtr chart;
    std::vector<SuperVectorField> generators;
    std::vector<SuperOneForm> annihilator;
    std::map<std::string, std::map<int, Rational>> points;
    std::vector<std::pair<int, int>> expected_growth;
    std::string expected_symbol;
    std::pair<int, int> expected_symmetry{-1, -1};
    std::string default_point = "base";
};

struct FGHKData {
    SuperPolynomial F, G, H, K;  // F,K even; G,H odd, on the (5|6) chart
};

namespace models {

// (5|6) chart x,u,u_x,u_xx,z | tau,nu,u_tau,u_nu,u_xtau,u_xnu
TablePtr shc_chart();

FGHKData shc_fghk();
FGHKData monge_fghk(int m);         // f(s) = s^m/m super-Monge data
FGHKData zero_fghk();

// Cartan superdistribution of the system z_x=F, z_nu=G, z_tau=H, u_nutau=K.
Model fghk_model(const FGHKData& d, const std::string& name);

Model shc_model();                  // fghk_model(shc_fghk())
Model submax_model(int m);          // fghk_model(monge_fghk(m))
Model hc_classical_model();         // purely even Hilbert-Cartan chart
Model flat_contact22_model();       // contact distribution on J^1(C^{2|2},C)
Model g3system_model();             // rank (3|4) system distribution on the (6|6) chart
Model g3system_rank22_model();      // rank (2|2) sub-bundle spanned by C, d_lambda, d_theta, d_phi
Model lift_m12(const FGHKData& d);  // rank (2|2) lifted distribution with fibre coordinate lambda

// The 31 symmetry fields of the SHC equation (17 even then 14 odd).
std::vector<SuperVectorField> shc_symmetries();
// The 18 symmetry fields of the submaximal model (10 even then 8 odd).
std::vector<SuperVectorField> submax_symmetries(int m);

// First-jet chart (x,y,nu,tau,u,u_x,u_y,u_nu,u_tau) for the contact picture.
TablePtr j1_chart();

struct NamedFunction {
    std::string name;
    std::string expr;
    int degree;  // weighted degree; the function sits in g_{degree-2}
    Parity parity;
};
// Generating functions of the contact symmetries of the G(3)-contact
// super-PDE system (31 rows).
const std::vector<NamedFunction>& g3_contact_functions();

// Symbol models M1..M4 as graded LSAs with growth (2|4,1|2,2|0).
GradedLSA symbol_model(const std::string& which);

// Negatively graded part of the contact grading: Heisenberg superalgebra with
// dims (4|4),(1|0), bracket given by the CSpO form.
GradedLSA contact_symbol();

// Model lookup by shipped name (shc, g3contact-system, hc-classical,
// submax-m2..m5, fghk-template aliases).
Model model_by_name(const std::string& name);

}  // namespace models

}  // namespace sg

#endif
