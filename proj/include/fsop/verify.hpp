#pragma once

#include "fsop/holonomic.hpp"

#include <map>
#include <string>

namespace fsop {

/// One property check. `measured` is compared against `tolerance` unless the
/// check is a yes/no property, in which case measured is the violation count.
struct CheckRow {
    std::string suite;
    std::string name;
    double measured = 0;
    double tolerance = 0;
    bool passed = false;
    bool gating = true;  // informational rows never fail a run
    std::string detail;
};

struct VerifyConfig {
    // Mass points for parameter-dependent checks; empty means suite defaults.
    std::vector<SobolevParams> params;
    // Restrict degree-dependent holonomic/zeros checks to one degree; 0 = full range.
    int n = 0;
    std::map<std::string, double> tolerance_overrides;

    double tol(const std::string& name, double fallback) const;
};

const std::vector<std::string>& suite_names();

std::vector<CheckRow> verify_suite(const std::string& suite, const FreudTable& ft, const VerifyConfig& cfg = {});

bool all_passed(const std::vector<CheckRow>& rows);

// Individual checks, shared with the acceptance driver.
namespace checks {

CheckRow a1_certificate(const FreudTable& ft, const VerifyConfig& cfg = {});
CheckRow string_residuals(const FreudTable& ft, int n_upto, const VerifyConfig& cfg = {});
CheckRow stieltjes_agreement(const FreudTable& ft, int n_upto, int points, const VerifyConfig& cfg = {});
CheckRow gamma_reflection(int digits, const VerifyConfig& cfg = {});
CheckRow lew_quarles_halving(const FreudTable& ft);

// Log-log decay exponents over n in [lo, hi] (both parities pooled).
CheckRow lew_quarles_decay(const FreudTable& ft, int lo, int hi, const VerifyConfig& cfg = {});
std::vector<CheckRow> sobolev_decay(const FreudTable& ft, const SobolevParams& p, int lo, int hi,
                                    const VerifyConfig& cfg = {});

CheckRow appell_relation(const FreudTable& ft, int n_upto, const VerifyConfig& cfg = {});
CheckRow structure_relation(const FreudTable& ft, int n_upto, const VerifyConfig& cfg = {});
CheckRow confluent_kernels(const FreudTable& ft, int n_upto, const VerifyConfig& cfg = {});
CheckRow kernel_parity(const FreudTable& ft, int n_upto, const VerifyConfig& cfg = {});
CheckRow kernel_quotient(const FreudTable& ft, int n_upto, const VerifyConfig& cfg = {});
CheckRow reproducing_property(const FreudTable& ft, int n_upto, const VerifyConfig& cfg = {});
CheckRow boundary_signs(const FreudTable& ft, int n_upto);
std::vector<CheckRow> kernel_growth(const FreudTable& ft, const VerifyConfig& cfg = {});

CheckRow q_parity(const FreudTable& ft, const SobolevParams& p, int n_upto, const VerifyConfig& cfg = {});
CheckRow decoupling(const FreudTable& ft, const SobolevParams& p, int n_upto);
CheckRow five_term_residual(const FreudTable& ft, const SobolevParams& p, int n_upto, int points,
                            const VerifyConfig& cfg = {});
CheckRow representations(const FreudTable& ft, const SobolevParams& p, int n_upto, const VerifyConfig& cfg = {});
CheckRow connection_identities(const FreudTable& ft, const SobolevParams& p, int n_upto,
                               const VerifyConfig& cfg = {});
CheckRow norm_consistency(const FreudTable& ft, const SobolevParams& p, int n_upto, const VerifyConfig& cfg = {});
std::vector<CheckRow> orthogonality(const FreudTable& ft, const SobolevParams& p, int n_upto,
                                    const VerifyConfig& cfg = {});
std::vector<CheckRow> limit_polynomials(const FreudTable& ft, const VerifyConfig& cfg = {});

CheckRow freud_zero_residuals(const FreudTable& ft, int n_upto, const VerifyConfig& cfg = {});
CheckRow q_zero_quality(const FreudTable& ft, const SobolevParams& p, int n_upto, const VerifyConfig& cfg = {});
CheckRow unperturbed_zeros(const FreudTable& ft, int n_upto, const VerifyConfig& cfg = {});
CheckRow krall_interlacing_chain(const FreudTable& ft, int n_odd_upto, const std::vector<Real>& m0_values,
                                 const std::vector<Real>& m1_values);
std::vector<CheckRow> kernel_zero_interlacing(const FreudTable& ft, int n_upto);
std::vector<CheckRow> m1_dynamics(const FreudTable& ft, int n_odd, const std::vector<Real>& grid,
                                  const VerifyConfig& cfg = {});
CheckRow m1_rate(const FreudTable& ft, int n_odd, const VerifyConfig& cfg = {});

std::vector<CheckRow> ladder_identities(const FreudTable& ft, const SobolevParams& p, int n_lo, int n_hi,
                                        const VerifyConfig& cfg = {});
CheckRow ode_residuals(const FreudTable& ft, const std::vector<SobolevParams>& ps, int n_lo, int n_hi,
                       int samples, const VerifyConfig& cfg = {});
CheckRow closed_form_R(const FreudTable& ft, const std::vector<Real>& m1_values, int n_odd_upto,
                       const VerifyConfig& cfg = {});
CheckRow electrostatics(const FreudTable& ft, const std::vector<Real>& m1_values, Real M0, int n_odd_upto,
                        const VerifyConfig& cfg = {});
CheckRow polish_improves_equilibrium(const FreudTable& ft, const SobolevParams& p, int n_odd);
CheckRow rational_algebra(const VerifyConfig& cfg = {});
CheckRow u_signs(const FreudTable& ft, const std::vector<Real>& m1_values, int n_odd_upto);
std::vector<CheckRow> z_asymptotics_report(const FreudTable& ft, Real M1, int n_index);

}  // namespace checks

}  // namespace fsop
