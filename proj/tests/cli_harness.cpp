// Subprocess checks for the command-line tool. Takes the CLI path as
// argv[1]; each case runs a shell command and compares output and exit
// status.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& cmd) {
    Result r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

int failures = 0;

void expect(const std::string& name, const Result& r, int status, const std::string& out) {
    if (r.status == status && r.out == out) {
        std::cout << "ok  " << name << "\n";
        return;
    }
    ++failures;
    std::cout << "FAIL " << name << ": status " << r.status << " (want " << status
              << "), output <<<" << r.out << ">>> (want <<<" << out << ">>>)\n";
}

void expect_status(const std::string& name, const Result& r, int status) {
    if (r.status == status) {
        std::cout << "ok  " << name << "\n";
        return;
    }
    ++failures;
    std::cout << "FAIL " << name << ": status " << r.status << " (want " << status << ")\n";
}

void expect_contains(const std::string& name, const Result& r, int status,
                     const std::string& needle) {
    if (r.status == status && r.out.find(needle) != std::string::npos) {
        std::cout << "ok  " << name << "\n";
        return;
    }
    ++failures;
    std::cout << "FAIL " << name << ": status " << r.status << ", output <<<" << r.out
              << ">>> missing <<<" << needle << ">>>\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_harness <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    expect("sweep worked example", run(cli + " sweep --mod 5 3113214"), 0, "1331421\n");
    expect("sweep comma input", run(cli + " sweep --mod 5 3,1,1,3,2,1,4"), 0, "1331421\n");
    expect("sweep empty word", run(cli + " sweep --mod 5 \"\""), 0, "\n");
    expect("unsweep worked example", run(cli + " unsweep --mod 5 1331421"), 0, "3113214\n");
    expect("presweep worked example", run(cli + " presweep --mod 5 3113214"), 0,
           "1|33|\xc2\xb7|1|421\n");
    expect("unpresweep success", run(cli + " unpresweep --mod 5 '1|33|\xc2\xb7|1|421'"), 0,
           "3113214\n");
    expect("unpresweep failure prints residue", run(cli + " unpresweep --mod 5 '13|31|4|2|1'"),
           1, "3|1|4|2|\xc2\xb7\n");

    expect("rightmost", run(cli + " rightmost --mod 5 1331421"), 0, "1|33|\xc2\xb7|1|421\n");
    expect("leftmost", run(cli + " leftmost --mod 5 1331421"), 0, "13|31|4|2|1\n");
    expect("successful from leftmost", run(cli + " successful --mod 5 1331421"), 0,
           "1|33|\xc2\xb7|1|421\n");

    expect("pipe round trip",
           run("printf '3113214\\n2024431\\n' | " + cli + " sweep --mod 5 - | " + cli +
               " unsweep --mod 5 -"),
           0, "3113214\n2024431\n");

    expect_contains("lattice dot", run(cli + " lattice --mod 5 1331421 --dot"), 0,
                    "digraph equitable_lattice");
    expect_contains("lattice json", run(cli + " lattice --mod 5 1331421 --json"), 0,
                    "\"nodes\"");
    expect("array ascii",
           run(cli + " array --mod 3 --ascii '0|\xc2\xb7|1'"), 0,
           ". . .\n. . #\n");

    expect("schedule latest", run(cli + " schedule latest --hours 5 1,3,3,1,4,2,1"), 0,
           "1,2,2,4,5,5,5\n");
    expect("schedule check",
           run(cli + " schedule check --hours 5 --starts 1,2,2,4,5,5,5 1,3,3,1,4,2,1"), 0,
           "successful\nwatched: 5,4,6,2,7,1,3\n");
    expect_contains("schedule check unsuccessful",
                    run(cli + " schedule check --hours 5 --starts 1,1,2,2,3,4,5 1,3,3,1,4,2,1"),
                    0, "unsuccessful");

    expect("zsweep", run(cli + " zsweep --content 3:2,-2:3 3,-2,3,-2,-2"), 0, "3,3,-2,-2,-2\n");
    expect("unzsweep", run(cli + " unzsweep --content 3:2,-2:3 3,3,-2,-2,-2"), 0,
           "3,-2,3,-2,-2\n");
    expect("zeta", run(cli + " zeta --ab 3,-2 3,-2,3,-2,-2"), 0, "3,3,-2,-2,-2\n");
    expect("unzeta", run(cli + " unzeta --ab 3,-2 3,3,-2,-2,-2"), 0, "3,-2,3,-2,-2\n");
    expect("dyck enumerate", run(cli + " dyck enumerate --ab 3,-2"), 0,
           "3,-2,3,-2,-2\n3,3,-2,-2,-2\n");
    expect("dyck filter",
           run("printf -- '3,-2,3,-2,-2\\n3,-2,-2,3,-2\\n' | " + cli + " dyck filter -"), 0,
           "3,-2,3,-2,-2\n");

    expect_status("verify bijective", run(cli + " verify bijective --mod 3 --len 4"), 0);
    expect_status("verify theorems", run(cli + " verify theorems --mod 2 --len 4"), 0);
    expect_status("verify zeta", run(cli + " verify zeta --ab 3,-2 --ab 1,-1"), 0);
    expect_contains("verify json", run(cli + " verify bijective --mod 2 --len 3 --json"), 0,
                    "\"pass\": true");

    // Exit statuses: domain errors 1, usage errors 2.
    expect_status("bad letter is a domain error", run(cli + " sweep --mod 5 9321"), 1);
    expect_status("bad partition is a domain error", run(cli + " unpresweep --mod 5 '1|2'"), 1);
    expect_status("non-Dyck zeta input is a domain error",
                  run(cli + " zeta --ab 3,-2 3,-2,-2,3,-2"), 1);
    expect_status("unknown flag is a usage error", run(cli + " sweep --modulus 5 1"), 2);
    expect_status("missing subcommand is a usage error", run(cli), 2);
    expect_status("missing required option is a usage error", run(cli + " sweep 101"), 2);
    expect_status("budget exhaustion is a domain error",
                  run(cli + " verify bijective --mod 5 --len 12 --budget 1000"), 1);

    if (failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cout << failures << " cli checks failed\n";
    return 1;
}
