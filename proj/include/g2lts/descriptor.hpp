#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "hp_type.hpp"

namespace g2lts {

constexpr double kPi = 3.14159265358979323846;
constexpr double kArctanHalf = 0.46364760900080611621;   // arctan(1/2)
constexpr double kArctanThird = 0.32175055439664219340;  // arctan(1/3)

enum class Family { Geo, P0, S13, P12, P44, S5, G2, PxP, S1xS5, Sp2, Q3 };

/// Symbolic name of a classification type with its parameters.
struct LtsDescriptor {
    Family family = Family::Geo;
    double t = 0;                 // Geo: characteristic angle in [0, pi/4]
    HPTypeName tau{}, tau2{};     // P0 / P12 / P44 / G2 / PxP
    int ell = 0;                  // S13 (2 or 3), S1xS5 (2..5)

    static LtsDescriptor geo(double t) {
        LtsDescriptor d;
        d.family = Family::Geo;
        d.t = t;
        return d;
    }
    static LtsDescriptor p0(HPTypeName tau) { return with_tau(Family::P0, tau); }
    static LtsDescriptor s13(int l) {
        LtsDescriptor d;
        d.family = Family::S13;
        d.ell = l;
        return d;
    }
    static LtsDescriptor p12(HPTypeName tau) { return with_tau(Family::P12, tau); }
    static LtsDescriptor p44(HPTypeName tau) { return with_tau(Family::P44, tau); }
    static LtsDescriptor s5() {
        LtsDescriptor d;
        d.family = Family::S5;
        return d;
    }
    static LtsDescriptor g2(HPTypeName tau) { return with_tau(Family::G2, tau); }
    static LtsDescriptor pxp(HPTypeName t1, HPTypeName t2) {
        LtsDescriptor d;
        d.family = Family::PxP;
        d.tau = t1;
        d.tau2 = t2;
        return d;
    }
    static LtsDescriptor s1xs5(int l) {
        LtsDescriptor d;
        d.family = Family::S1xS5;
        d.ell = l;
        return d;
    }
    static LtsDescriptor sp2() {
        LtsDescriptor d;
        d.family = Family::Sp2;
        return d;
    }
    static LtsDescriptor q3() {
        LtsDescriptor d;
        d.family = Family::Q3;
        return d;
    }

  private:
    static LtsDescriptor with_tau(Family f, HPTypeName tau) {
        LtsDescriptor d;
        d.family = f;
        d.tau = tau;
        return d;
    }
};

namespace detail {

inline int hp_key(const HPTypeName& t) {
    const int k = t.kind == HPKind::R ? 0 : t.kind == HPKind::C ? 1 : t.kind == HPKind::H ? 2 : 3;
    return k * 1000 + t.dim();
}

}  // namespace detail

/// Canonical form used for descriptor equality: the theorem's identifications
/// Geo(0) = (P, phi=0, (R,1)), Geo(arctan 1/2) = (P, arctan 1/2, (R,1)),
/// Geo(pi/4) = (P, pi/4, (R,1)), and PxP symmetric in its two factors.
inline LtsDescriptor canonical(const LtsDescriptor& d, double tol = 1e-8) {
    LtsDescriptor c = d;
    if (c.family == Family::Geo) {
        if (std::abs(c.t) <= tol) return LtsDescriptor::p0(hp_R(1));
        if (std::abs(c.t - kArctanHalf) <= tol) return LtsDescriptor::p12(hp_R(1));
        if (std::abs(c.t - kPi / 4) <= tol) return LtsDescriptor::p44(hp_R(1));
    }
    if (c.family == Family::PxP && detail::hp_key(c.tau) > detail::hp_key(c.tau2))
        std::swap(c.tau, c.tau2);
    return c;
}

inline bool descriptors_equal(const LtsDescriptor& a, const LtsDescriptor& b, double tol = 1e-8) {
    const LtsDescriptor x = canonical(a, tol), y = canonical(b, tol);
    if (x.family != y.family) return false;
    switch (x.family) {
        case Family::Geo: return std::abs(x.t - y.t) <= tol;
        case Family::P0:
        case Family::P12:
        case Family::P44:
        case Family::G2: return x.tau == y.tau;
        case Family::PxP: return x.tau == y.tau && x.tau2 == y.tau2;
        case Family::S13:
        case Family::S1xS5: return x.ell == y.ell;
        default: return true;
    }
}

// ---------------------------------------------------------------------------
// Theorem table data: validity bounds, dimension, rank, maximality, container
// ---------------------------------------------------------------------------

/// Empty result means valid at this n; otherwise names the violated bound.
inline std::optional<std::string> describe_invalid(const LtsDescriptor& d, int n) {
    auto err = [](const std::string& s) { return std::optional<std::string>(s); };
    if (n < 2) return err("n >= 2 required");
    switch (d.family) {
        case Family::Geo:
            if (d.t < -1e-12 || d.t > kPi / 4 + 1e-12) return err("Geo needs t in [0, pi/4]");
            return std::nullopt;
        case Family::P0:
            if (d.tau.dim() > n) return err("P0 needs dim(tau) <= n");
            return std::nullopt;
        case Family::S13:
            if (d.ell != 2 && d.ell != 3) return err("S13 needs l in {2, 3}");
            return std::nullopt;
        case Family::P12:
            if (d.tau.dim() == 1) {
                if (d.tau.width() > n - 1) return err("P12 with dim(tau) = 1 needs w(tau) <= n-1");
                return std::nullopt;
            }
            if (d.tau.dim() == 2) {
                const int need = d.tau.kind == HPKind::R ? 3 : d.tau.kind == HPKind::C ? 4 : 5;
                if (n < need)
                    return err("P12:" + d.tau.str() + " needs n >= " + std::to_string(need));
                return std::nullopt;
            }
            return err("P12 needs dim(tau) <= 2");
        case Family::P44:
            if (2 * d.tau.dim() > n) return err("P44 needs dim(tau) <= n/2");
            return std::nullopt;
        case Family::S5: return std::nullopt;
        case Family::G2:
            if (d.tau.kind == HPKind::S3) return err("G2 excludes tau = (S^3)");
            if (d.tau.dim() > n) return err("G2 needs dim(tau) <= n");
            return std::nullopt;
        case Family::PxP:
            if (d.tau.dim() + d.tau2.dim() > n) return err("PxP needs dim(tau1) + dim(tau2) <= n");
            return std::nullopt;
        case Family::S1xS5:
            if (d.ell < 2 || d.ell > 5) return err("S1xS5 needs l in {2..5}");
            return std::nullopt;
        case Family::Sp2:
        case Family::Q3: return std::nullopt;
    }
    return err("unknown descriptor");
}

inline bool valid_for(const LtsDescriptor& d, int n) { return !describe_invalid(d, n); }

inline int descriptor_dim(const LtsDescriptor& d) {
    switch (d.family) {
        case Family::Geo: return 1;
        case Family::P0:
        case Family::P12:
        case Family::P44: return d.tau.real_dim();
        case Family::S13: return d.ell;
        case Family::S5: return 5;
        case Family::G2: return 2 * d.tau.real_dim();
        case Family::PxP: return d.tau.real_dim() + d.tau2.real_dim();
        case Family::S1xS5: return 1 + d.ell;
        case Family::Sp2: return 10;
        case Family::Q3: return 6;
    }
    return 0;
}

inline int descriptor_rank(const LtsDescriptor& d) {
    switch (d.family) {
        case Family::Geo:
        case Family::P0:
        case Family::S13:
        case Family::P12:
        case Family::P44:
        case Family::S5: return 1;
        case Family::G2: return d.tau.dim() >= 2 ? 2 : 1;
        default: return 2;
    }
}

/// Maximality column of the classification table.
inline bool is_maximal(const LtsDescriptor& d, int n) {
    switch (d.family) {
        case Family::P0: return d.tau == hp_H(n);
        case Family::P12:
            return (n == 4 && d.tau == hp_S3()) || (n == 5 && d.tau == hp_H(2));
        case Family::G2:
            return d.tau == hp_C(n) || d.tau == hp_H(n - 1) || d.tau == hp_H(n);
        case Family::PxP:
            return d.tau.kind == HPKind::H && d.tau2.kind == HPKind::H &&
                   d.tau.ell + d.tau2.ell == n;
        case Family::S1xS5: return d.ell == 5 && n == 2;
        case Family::Sp2: return n == 2;
        default: return false;
    }
}

/// Inclusion table: the containing type, or nullopt when maximal. The paper's
/// table has no row for (P, arctan 1/2, (H,2)) at n >= 6; the standard copy
/// lies in a (G_2,(H,5)) system, which is what gets returned there.
inline std::optional<LtsDescriptor> container_of(const LtsDescriptor& d, int n) {
    if (auto why = describe_invalid(d, n)) throw std::invalid_argument(*why);
    if (is_maximal(d, n)) return std::nullopt;
    switch (d.family) {
        case Family::Geo: return LtsDescriptor::pxp(hp_R(1), hp_R(1));
        case Family::P0: return LtsDescriptor::p0(hp_H(n));
        case Family::S13: return LtsDescriptor::sp2();
        case Family::P12:
            if (d.tau.kind == HPKind::R) return LtsDescriptor::g2(hp_R(d.tau.ell + 1));
            if (d.tau.kind == HPKind::C) return LtsDescriptor::g2(hp_C(d.tau.ell + 2));
            if (d.tau == hp_S3()) return LtsDescriptor::p12(hp_H(1));
            if (d.tau == hp_H(1) && n == 5) return LtsDescriptor::p12(hp_H(2));
            return LtsDescriptor::g2(hp_H(5));  // (H,1) and (H,2) with n >= 6
        case Family::P44: return LtsDescriptor::pxp(d.tau, d.tau);
        case Family::S5: return LtsDescriptor::s1xs5(5);
        case Family::G2:
            if (d.tau.kind == HPKind::H) return LtsDescriptor::g2(hp_H(n - 1));
            if (d.tau.dim() <= n - 1) return LtsDescriptor::g2({d.tau.kind, n});
            return LtsDescriptor::g2(hp_C(n));  // (R, n) -> (C, n)
        case Family::PxP:
            if (d.tau.kind == HPKind::H && d.tau2.kind == HPKind::H)
                return LtsDescriptor::pxp(hp_H(d.tau.ell), hp_H(n - d.tau.ell));
            return LtsDescriptor::pxp(hp_H(d.tau.dim()), hp_H(d.tau2.dim()));
        case Family::S1xS5:
            if (d.ell <= 4) return LtsDescriptor::s1xs5(5);
            return LtsDescriptor::g2(hp_H(2));  // l = 5, n >= 3
        case Family::Sp2: return LtsDescriptor::g2(hp_H(2));  // n >= 3
        case Family::Q3: return LtsDescriptor::g2(hp_C(2));
    }
    return std::nullopt;
}

/// Global isometry type of the corresponding totally geodesic submanifold.
inline std::string isometry_type_name(const LtsDescriptor& d) {
    auto kp = [](HPKind k) { return k == HPKind::R ? "RP" : k == HPKind::C ? "CP" : "HP"; };
    std::ostringstream os;
    switch (d.family) {
        case Family::Geo: os << "R or S^1"; break;
        case Family::P0:
            if (d.tau.kind == HPKind::S3)
                os << "S^3_{r=1/2}";
            else
                os << kp(d.tau.kind) << "^" << d.tau.ell << "_{1}";
            break;
        case Family::S13: os << "S^" << d.ell << "_{r=sqrt(10)/2}"; break;
        case Family::P12:
            if (d.tau.kind == HPKind::S3)
                os << "S^3_{r=sqrt(5)/2}";
            else
                os << kp(d.tau.kind) << "^" << d.tau.ell << "_{1/5}";
            break;
        case Family::P44:
            if (d.tau.kind == HPKind::S3)
                os << "S^3_{r=1/sqrt(2)}";
            else
                os << kp(d.tau.kind) << "^" << d.tau.ell << "_{1/2}";
            break;
        case Family::S5: os << "S^5_{r=1/sqrt(2)}"; break;
        case Family::G2:
            os << "G2(" << (d.tau.kind == HPKind::R ? "R" : d.tau.kind == HPKind::C ? "C" : "H")
               << "^" << d.tau.ell + 2 << ")";
            break;
        case Family::PxP: {
            auto one = [&](const HPTypeName& t) {
                if (t.kind == HPKind::S3)
                    os << "S^3_{r=1/2}";
                else
                    os << kp(t.kind) << "^" << t.ell << "_{1}";
            };
            one(d.tau);
            os << " x ";
            one(d.tau2);
            break;
        }
        case Family::S1xS5: os << "(S^1_{r=1/sqrt(2)} x S^" << d.ell << "_{r=1/sqrt(2)})/{+-id}"; break;
        case Family::Sp2: os << "Sp(2)"; break;
        case Family::Q3: os << "G2+(R^5)"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Descriptor string grammar (the CLI surface):
//   "Geo:t=0.3", "P:phi=0:H2", "S13:3", "P12:C2", "P44:S3", "S5",
//   "G2:C3", "PxP:H1,R2", "S1xS5:4", "Sp2", "Q3"
// ---------------------------------------------------------------------------

inline std::string tau_str(const HPTypeName& t) { return t.str(); }

inline HPTypeName parse_tau(const std::string& s) {
    if (s == "S3") return hp_S3();
    if (s.size() < 2) throw std::invalid_argument("bad HP-type: " + s);
    HPKind k;
    switch (s[0]) {
        case 'R': k = HPKind::R; break;
        case 'C': k = HPKind::C; break;
        case 'H': k = HPKind::H; break;
        default: throw std::invalid_argument("bad HP-type: " + s);
    }
    const int l = std::stoi(s.substr(1));
    if (l < 1) throw std::invalid_argument("bad HP-type: " + s);
    return {k, l};
}

inline std::string descriptor_str(const LtsDescriptor& d) {
    std::ostringstream os;
    switch (d.family) {
        case Family::Geo: {
            os << "Geo:t=";
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", d.t);
            os << buf;
            break;
        }
        case Family::P0: os << "P:phi=0:" << tau_str(d.tau); break;
        case Family::S13: os << "S13:" << d.ell; break;
        case Family::P12: os << "P12:" << tau_str(d.tau); break;
        case Family::P44: os << "P44:" << tau_str(d.tau); break;
        case Family::S5: os << "S5"; break;
        case Family::G2: os << "G2:" << tau_str(d.tau); break;
        case Family::PxP: os << "PxP:" << tau_str(d.tau) << "," << tau_str(d.tau2); break;
        case Family::S1xS5: os << "S1xS5:" << d.ell; break;
        case Family::Sp2: os << "Sp2"; break;
        case Family::Q3: os << "Q3"; break;
    }
    return os.str();
}

inline LtsDescriptor parse_descriptor(const std::string& s) {
    if (s == "S5") return LtsDescriptor::s5();
    if (s == "Sp2") return LtsDescriptor::sp2();
    if (s == "Q3") return LtsDescriptor::q3();
    if (s.rfind("Geo:t=", 0) == 0) return LtsDescriptor::geo(std::stod(s.substr(6)));
    if (s.rfind("P:phi=0:", 0) == 0) return LtsDescriptor::p0(parse_tau(s.substr(8)));
    if (s.rfind("S13:", 0) == 0) return LtsDescriptor::s13(std::stoi(s.substr(4)));
    if (s.rfind("P12:", 0) == 0) return LtsDescriptor::p12(parse_tau(s.substr(4)));
    if (s.rfind("P44:", 0) == 0) return LtsDescriptor::p44(parse_tau(s.substr(4)));
    if (s.rfind("G2:", 0) == 0) return LtsDescriptor::g2(parse_tau(s.substr(3)));
    if (s.rfind("S1xS5:", 0) == 0) return LtsDescriptor::s1xs5(std::stoi(s.substr(6)));
    if (s.rfind("PxP:", 0) == 0) {
        const auto body = s.substr(4);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("PxP needs two types: " + s);
        return LtsDescriptor::pxp(parse_tau(body.substr(0, comma)), parse_tau(body.substr(comma + 1)));
    }
    throw std::invalid_argument("unparsable descriptor: " + s);
}

/// Representative finite enumeration of the descriptors valid at n, used by
/// the tables command and the acceptance suite. Parametrized families take
/// l in {1, 2, n-1, n} (clipped and deduplicated); the ambient space itself,
/// (G_2, (H, n)), is excluded.
inline std::vector<LtsDescriptor> all_descriptors(int n) {
    std::vector<LtsDescriptor> out;
    auto add = [&](const LtsDescriptor& d) {
        if (!valid_for(d, n)) return;
        for (const auto& e : out)
            if (descriptors_equal(e, d)) return;
        out.push_back(d);
    };
    for (double t : {0.0, kArctanThird, kArctanHalf, kPi / 4, 0.3}) add(LtsDescriptor::geo(t));

    std::vector<int> ells;
    for (int l : {1, 2, n - 1, n})
        if (l >= 1 && l <= n && std::find(ells.begin(), ells.end(), l) == ells.end())
            ells.push_back(l);

    for (HPKind k : {HPKind::R, HPKind::C, HPKind::H})
        for (int l : ells) add(LtsDescriptor::p0({k, l}));
    add(LtsDescriptor::p0(hp_S3()));
    add(LtsDescriptor::s13(2));
    add(LtsDescriptor::s13(3));
    for (const auto& tau : {hp_R(1), hp_C(1), hp_S3(), hp_H(1), hp_R(2), hp_C(2), hp_H(2)})
        add(LtsDescriptor::p12(tau));
    for (HPKind k : {HPKind::R, HPKind::C, HPKind::H})
        for (int l : {1, 2, n / 2}) {
            if (l >= 1) add(LtsDescriptor::p44({k, l}));
        }
    add(LtsDescriptor::p44(hp_S3()));
    add(LtsDescriptor::s5());
    for (HPKind k : {HPKind::R, HPKind::C, HPKind::H})
        for (int l : ells) {
            if (k == HPKind::H && l == n) continue;  // ambient space
            add(LtsDescriptor::g2({k, l}));
        }
    const std::vector<HPTypeName> small = {hp_R(1), hp_C(1), hp_H(1), hp_S3(),
                                           hp_R(2), hp_C(2), hp_H(2)};
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i; j < small.size(); ++j) add(LtsDescriptor::pxp(small[i], small[j]));
    for (int l = 1; 2 * l <= n; ++l) add(LtsDescriptor::pxp(hp_H(l), hp_H(n - l)));
    for (int l = 2; l <= 5; ++l) add(LtsDescriptor::s1xs5(l));
    add(LtsDescriptor::sp2());
    add(LtsDescriptor::q3());
    return out;
}

}  // namespace g2lts
