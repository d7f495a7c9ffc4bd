#include "jtk/irreps.hpp"

#include "jtk/error.hpp"

namespace jtk {

namespace {

// h as a 1x1-free scalar polynomial, for readable expressions below.
const HPoly& h1() {
    static const HPoly h = HPoly::h();
    return h;
}

PolyMatrix scaled_by_h(PolyMatrix m) {
    m *= h1();
    return m;
}

} // namespace

GenSet gens(const JordanianIrrep& rep) {
    return GenSet{rep.T, rep.Tinv, rep.H, rep.Y, rep.X};
}

ClassicalIrrep classical_irrep(int two_j) {
    if (two_j < 0) throw error("classical_irrep: 2j must be non-negative");
    const int n = two_j + 1;
    ClassicalIrrep cl;
    cl.two_j = two_j;
    cl.Jp = PolyMatrix(n, n);
    cl.Jm = PolyMatrix(n, n);
    cl.J0 = PolyMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        cl.J0.at(k, k) = HPoly(rat(two_j - 2 * k));
    }
    for (int k = 1; k < n; ++k) {
        cl.Jp.at(k - 1, k) = HPoly(rat(k) * rat(n - k));
        cl.Jm.at(k, k - 1) = HPoly(rat(1));
    }
    return cl;
}

JordanianIrrep jordanian_irrep(const MapSpec& map, int two_j) {
    return jordanian_irrep_on(map, classical_irrep(two_j));
}

JordanianIrrep jordanian_irrep_on(const MapSpec& map, const ClassicalIrrep& cl) {
    const int n = cl.dim();
    const InverseSolution inv = solve_inverse(map, n);
    const PolyMatrix Z = scaled_by_h(cl.Jp);

    JordanianIrrep rep;
    rep.two_j = cl.two_j;
    rep.map = map;
    rep.T = apply_series(inv.g1, Z);
    rep.Tinv = apply_series(inv.g1inv, Z);
    rep.H = apply_series(inv.G2, Z) * cl.J0;
    rep.Y = apply_series(inv.G3, Z) * cl.Jm + scaled_by_h(apply_series(inv.Abar, Z)) +
            scaled_by_h(apply_series(inv.Bbar, Z)) * cl.J0 +
            scaled_by_h(apply_series(inv.Cbar, Z)) * (cl.J0 * cl.J0);
    rep.X = mat_div_h(mat_log_unipotent(rep.T), 1);
    return rep;
}

bool ResidualReport::all_zero() const {
    for (const auto& r : residuals)
        if (!r.zero()) return false;
    return true;
}

ResidualReport verify_jordanian_relations(const GenSet& g) {
    const PolyMatrix I = PolyMatrix::identity(g.T.rows());
    const HPoly& h = h1();

    ResidualReport rep;
    rep.residuals.push_back(
        {"[H,T] - (T^2 - 1)", commutator(g.H, g.T) - (g.T * g.T - I)});
    rep.residuals.push_back(
        {"[H,Tinv] - (Tinv^2 - 1)", commutator(g.H, g.Tinv) - (g.Tinv * g.Tinv - I)});
    rep.residuals.push_back(
        {"[H,Y] + (1/2)(Y(T+Tinv) + (T+Tinv)Y)",
         commutator(g.H, g.Y) +
             (g.Y * (g.T + g.Tinv) + (g.T + g.Tinv) * g.Y) * rat(1, 2)});
    rep.residuals.push_back(
        {"[T,Y] - (h/2)(HT + TH)",
         commutator(g.T, g.Y) - (g.H * g.T + g.T * g.H) * (h * HPoly(rat(1, 2)))});
    rep.residuals.push_back(
        {"[Tinv,Y] + (h/2)(HTinv + TinvH)",
         commutator(g.Tinv, g.Y) +
             (g.H * g.Tinv + g.Tinv * g.H) * (h * HPoly(rat(1, 2)))});
    rep.residuals.push_back({"[X,Y] - H", commutator(g.X, g.Y) - g.H});
    rep.residuals.push_back({"T*Tinv - 1", g.T * g.Tinv - I});
    rep.residuals.push_back({"Tinv*T - 1", g.Tinv * g.T - I});
    return rep;
}

ResidualReport verify_jordanian_relations(const JordanianIrrep& rep) {
    return verify_jordanian_relations(gens(rep));
}

ResidualReport verify_classical_relations(const ClassicalIrrep& cl) {
    ResidualReport rep;
    rep.residuals.push_back(
        {"[J0,Jp] - 2Jp", commutator(cl.J0, cl.Jp) - cl.Jp * rat(2)});
    rep.residuals.push_back(
        {"[J0,Jm] + 2Jm", commutator(cl.J0, cl.Jm) + cl.Jm * rat(2)});
    rep.residuals.push_back({"[Jp,Jm] - J0", commutator(cl.Jp, cl.Jm) - cl.J0});
    return rep;
}

ClassicalImages classical_images(const ForwardSolution& fwd, const GenSet& g) {
    // The series argument is h*X = log T, nilpotent by construction.
    const PolyMatrix wbar = mat_log_unipotent(g.T);

    ClassicalImages img;
    img.Jp = mat_div_h(apply_series(fwd.phi, wbar), 1);
    img.J0 = apply_series(fwd.F2, wbar) * g.H;
    img.Jm = apply_series(fwd.F3, wbar) * g.Y + scaled_by_h(apply_series(fwd.Ubar, wbar)) +
             scaled_by_h(apply_series(fwd.Vbar, wbar)) * g.H +
             scaled_by_h(apply_series(fwd.Wbar, wbar)) * (g.H * g.H);
    return img;
}

bool ReconstructionReport::exact() const {
    return diff_Jp.is_zero() && diff_J0.is_zero() && diff_Jm.is_zero();
}

ReconstructionReport reconstruct_classical(const MapSpec& map, const JordanianIrrep& rep) {
    const ForwardSolution fwd = solve_forward(map, rep.dim());
    const ClassicalIrrep cl = classical_irrep(rep.two_j);

    ReconstructionReport out;
    out.images = classical_images(fwd, gens(rep));
    out.diff_Jp = out.images.Jp - cl.Jp;
    out.diff_J0 = out.images.J0 - cl.J0;
    out.diff_Jm = out.images.Jm - cl.Jm;
    return out;
}

ResidualReport commutator_identity_checks(const JordanianIrrep& rep,
                                          const std::vector<WSeries>& fs,
                                          const std::vector<WSeries>& gs) {
    const int n = rep.dim();
    const PolyMatrix I = PolyMatrix::identity(n);
    const ClassicalIrrep cl = classical_irrep(rep.two_j);
    const PolyMatrix Z = scaled_by_h(cl.Jp);
    const PolyMatrix Tm1 = rep.T - I;
    const PolyMatrix Tsq_m1 = rep.T * rep.T - I;

    ResidualReport out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const PolyMatrix lhs = commutator(rep.H, apply_series(fs[i], Tm1));
        const PolyMatrix rhs = Tsq_m1 * apply_series(fs[i].derivative(), Tm1);
        out.residuals.push_back(
            {"[H, f" + std::to_string(i) + "(T-1)] - (T^2-1) f'", lhs - rhs});
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const PolyMatrix lhs = commutator(cl.J0, apply_series(gs[i], Z));
        const PolyMatrix rhs = Z * apply_series(gs[i].derivative(), Z) * rat(2);
        out.residuals.push_back(
            {"[J0, g" + std::to_string(i) + "(hJp)] - 2 hJp g'", lhs - rhs});
    }
    return out;
}

} // namespace jtk
