// brauer: bases, certificates and dimension tables from the command line.
//
// exit codes: 0 ok, 1 usage, 2 cap exceeded, 3 certificate failure

#include "brauer/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace brauer;

namespace {

constexpr int kHardMaxR = 6;

struct Config {
    std::string flavor = "symplectic";
    int r = 2;
    int N = 1;
    std::string field = "Q";
    long p = 0;
    bool dual = false;
    bool split = false;
    std::string out;
    std::string format = "json";
    std::size_t max_tensor_dim = 65536;
    int max_r = 5;
    int jobs = 1;
    bool timing = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long field_prime(const Config& c, Flavor f)
{
    if (c.field == "Q") {
        if (c.p != 0) throw UsageError("--p needs --field Fp");
        return 0;
    }
    if (c.p < 2) throw UsageError("--field Fp needs --p");
    for (long q = 2; q * q <= c.p; ++q)
        if (c.p % q == 0) throw UsageError("--p must be prime");
    if (f == Flavor::orthogonal && c.p == 2) throw UsageError("orthogonal flavor excludes p = 2");
    return c.p;
}

void check_caps(const Config& c)
{
    if (c.max_r < 1 || c.max_r > kHardMaxR) throw UsageError("--max-r must lie in 1.." + std::to_string(kHardMaxR));
    if (c.max_tensor_dim < 1) throw UsageError("--max-tensor-dim must be positive");
    if (c.r < 1) throw UsageError("--r must be positive");
    if (c.N < 1) throw UsageError("--N must be positive");
    if (c.jobs < 1) throw UsageError("--jobs must be positive");
    if (c.r > c.max_r) throw CapExceeded("r = " + std::to_string(c.r) + " exceeds --max-r " + std::to_string(c.max_r));
}

void emit(const Config& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot open " + c.out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// one entry per line; bases get long
std::string dump_lines(const Json& arr)
{
    std::string s = "[\n";
    for (std::size_t i = 0; i < arr.size(); ++i) s += "  " + arr[i].dump() + (i + 1 < arr.size() ? ",\n" : "\n");
    return s + "]\n";
}

int cmd_basis(const Config& c)
{
    Flavor f = *parse_flavor(c.flavor);
    check_caps(c);
    Json out;
    if (c.split) {
        SplitBasis sb(f, c.N, c.r, c.jobs);
        out = split_json(sb);
    } else {
        MurphyBasis b(c.r, BasisKind{f != Flavor::symmetric, c.dual});
        out = murphy_json(b);
    }
    emit(c, c.format == "json" ? dump_lines(out) : basis_table(out));
    return 0;
}

int cmd_certify(const Config& c)
{
    Flavor f = *parse_flavor(c.flavor);
    CertifyOptions o;
    o.p = field_prime(c, f);
    check_caps(c);
    o.max_tensor_dim = c.max_tensor_dim;
    o.jobs = c.jobs;
    auto t0 = std::chrono::steady_clock::now();
    Certificate cert = certify_sft(f, c.N, c.r, o);
    if (c.timing) {
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cerr << "certify: " << s << " s\n";
    }
    emit(c, c.format == "json" ? dump(certificate_json(cert)) : certificate_table(cert));
    return cert.passed() ? 0 : 3;
}

int cmd_dims(const Config& c)
{
    Flavor f = *parse_flavor(c.flavor);
    long p = field_prime(c, f);
    check_caps(c);
    auto rows = dims_table(f, c.N, c.r, c.r, c.max_tensor_dim, p, c.jobs);
    emit(c, c.format == "json" ? dump(dims_json(rows)) : dims_table_text(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Murphy bases of Brauer algebras and the kernel of tensor-space representations"};
    app.require_subcommand(1);
    Config c;

    auto common = [&c](CLI::App* sub) {
        sub->add_option("--flavor", c.flavor, "symplectic | orthogonal | symmetric")
            ->check(CLI::IsMember({"symplectic", "orthogonal", "symmetric", "sp", "o", "sym"}));
        sub->add_option("--r", c.r, "number of strands");
        sub->add_option("--N", c.N, "rank: dim V = 2N (symplectic) or N");
        sub->add_option("--field", c.field, "Q | Fp")->check(CLI::IsMember({"Q", "Fp"}));
        sub->add_option("--p", c.p, "characteristic for --field Fp");
        sub->add_option("--out", c.out, "write here instead of stdout");
        sub->add_option("--format", c.format, "json | table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--max-tensor-dim", c.max_tensor_dim, "cap on dim V^r");
        sub->add_option("--max-r", c.max_r, "cap on r (at most 6)");
        sub->add_option("--jobs", c.jobs, "worker threads");
    };

    auto* basis = app.add_subcommand("basis", "Murphy, dual Murphy or split basis as JSON");
    common(basis);
    basis->add_flag("--dual", c.dual, "dual Murphy basis (ignored with --split, which follows the flavor)");
    basis->add_flag("--split", c.split, "basis adapted to the kernel at delta_0");

    auto* certify = app.add_subcommand("certify", "run the kernel and image certificate");
    common(certify);
    certify->add_flag("--timing", c.timing, "report wall time on stderr");

    auto* dims = app.add_subcommand("dims", "permissible path counts and image ranks up to --r");
    common(dims);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*basis) return cmd_basis(c);
        if (*certify) return cmd_certify(c);
        return cmd_dims(c);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    }
}
