#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "adsgeo/verify.hpp"
#include "commands.hpp"

using namespace adsgeo;
using namespace adsgeo::cli;

namespace {

void add_output(CLI::App* sub, Output& o) {
    sub->add_option("--out,-o", o.path, "output file (default stdout)");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

int report_error(const std::exception& e) {
    nlohmann::json rec;
    const int code = exit_code_for(e, rec);
    std::cerr << rec.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sub-Lorentzian geodesics and horizontal curves on AdS3"};
    app.require_subcommand(1);

    GeodesicParams gp;
    auto* geo = app.add_subcommand("geodesic", "sample a closed-form geodesic");
    geo->add_option("--dist", gp.dist, "tx or xy");
    geo->add_option("--family", gp.family, "const-timelike | const-spacelike | const-lightlike | const | vertical | "
                                           "cartesian | parametric")
        ->required();
    geo->add_option("--psi", gp.psi, "family parameter (radians)");
    geo->add_option("--s-min", gp.s_min);
    geo->add_option("--s-max", gp.s_max);
    geo->add_option("--n", gp.n, "number of samples");
    geo->add_option("--alpha-sign", gp.alpha_sign);
    geo->add_option("--beta-sign", gp.beta_sign);
    geo->add_option("--A", gp.A);
    geo->add_option("--B", gp.B);
    geo->add_option("--C", gp.C);
    geo->add_option("--D", gp.D);
    geo->add_option("--chart", gp.chart, "timelike | spacelike | subriem (parametric family)");
    geo->add_option("--phi-dot0", gp.phi_dot0);
    geo->add_option("--chi2-dot", gp.chi2_dot);
    geo->add_option("--chi2-0", gp.chi2_0);
    add_output(geo, gp.out);

    IntegrateParams ip;
    auto* integ = app.add_subcommand("integrate", "integrate the Hamiltonian flow");
    integ->add_option("--dist", ip.dist, "tx or xy");
    integ->add_option("--x", ip.x, "initial point x1,x2,x3,x4")->delimiter(',')->expected(4);
    integ->add_option("--xi", ip.xi, "initial covector xi1..xi4")->delimiter(',')->expected(4);
    integ->add_option("--tau", ip.tau, "xi.T when --xi is absent");
    integ->add_option("--varsigma", ip.varsigma, "xi.X when --xi is absent");
    integ->add_option("--kappa", ip.kappa, "xi.Y when --xi is absent");
    integ->add_option("--nu", ip.nu, "xi.N when --xi is absent");
    integ->add_option("--s0", ip.s0);
    integ->add_option("--s1", ip.s1);
    integ->add_option("--step", ip.step);
    integ->add_option("--method", ip.method, "rk4 or rk45");
    integ->add_option("--rtol", ip.rtol);
    integ->add_option("--atol", ip.atol);
    integ->add_option("--record-every", ip.record_every);
    integ->add_flag("--strict", ip.strict, "abort on a diagnostic breach");
    integ->add_option("--strict-bound", ip.strict_bound);
    integ->add_option("--tol", ip.tol, "on-manifold tolerance");
    add_output(integ, ip.out);

    ConnectParams cp;
    auto* con = app.add_subcommand("connect", "horizontal curve between two points");
    con->add_option("--dist", cp.dist, "tx or xy");
    con->add_option("--chart", cp.chart, "global (phi,psi,theta) or cartesian (x1..x4)")->required();
    con->add_option("--P", cp.P)->delimiter(',')->required();
    con->add_option("--Q", cp.Q)->delimiter(',')->required();
    con->add_option("--n", cp.n, "number of samples");
    con->add_flag("--const-psi", cp.const_psi, "constant-psi curve (tx)");
    con->add_flag("--const-theta", cp.const_theta, "constant-theta curve (xy)");
    con->add_flag("--piecewise", cp.piecewise, "piecewise timelike curve (tx)");
    con->add_option("--tol", cp.tol);
    add_output(con, cp.out);

    std::string verify_out, inject;
    auto* ver = app.add_subcommand("verify", "run the invariant suites and print a JSON report");
    ver->add_option("--out,-o", verify_out, "report file (default stdout)");
    ver->add_option("--inject-fault", inject, "test only: perturb the named suite")->group("");

    std::string sweep_cfg;
    auto* sw = app.add_subcommand("sweep", "run a batch of commands from a JSON config");
    sw->add_option("--config", sweep_cfg, "JSON file with {\"runs\": [...]}")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*geo) {
            emit(cmd_geodesic(gp), gp.out);
        } else if (*integ) {
            emit(cmd_integrate(ip), ip.out);
        } else if (*con) {
            emit(cmd_connect(cp), cp.out);
        } else if (*ver) {
            const auto& names = verify_suite_names();
            if (!inject.empty() && std::find(names.begin(), names.end(), inject) == names.end())
                throw UsageError("unknown suite '" + inject + "'");
            VerifyOptions opt;
            opt.inject_fault = inject;
            const auto rep = run_verify(opt);
            const std::string text = rep.to_json().dump(2);
            if (verify_out.empty()) {
                std::cout << text << '\n';
            } else {
                std::ofstream(verify_out) << text << '\n';
            }
            for (const auto& s : rep.suites) std::cerr << (s.pass ? "PASS  " : "FAIL  ") << s.name << '\n';
            return rep.all_pass() ? kExitOk : kExitFailure;
        } else if (*sw) {
            std::ifstream in(sweep_cfg);
            nlohmann::json cfg;
            try {
                cfg = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(std::string("sweep config: ") + e.what());
            }
            const auto res = cmd_sweep(cfg);
            int rc = kExitOk;
            nlohmann::json summary = nlohmann::json::array();
            for (const auto& r : res) {
                summary.push_back({{"out", r.out}, {"exit_code", r.exit_code}, {"message", r.message}});
                rc = std::max(rc, r.exit_code == kExitOk ? kExitOk : kExitFailure);
            }
            std::cout << summary.dump(2) << '\n';
            return rc;
        }
    } catch (const std::exception& e) {
        return report_error(e);
    }
    return kExitOk;
}
