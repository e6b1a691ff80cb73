/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/io.hh>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <sys/wait.h>

using std::string;

namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int status;
        string output;
    };

    auto run(const string & arguments) -> Run
    {
        string command = string(MINHOM_CLI_PATH) + " " + arguments + " 2>&1";
        FILE * pipe = popen(command.c_str(), "r");
        REQUIRE(pipe);
        string output;
        std::array<char, 4096> buffer;
        std::size_t got;
        while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
            output.append(buffer.data(), got);
        int raw = pclose(pipe);
        return Run{ WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, output };
    }

    struct Scratch
    {
        fs::path dir;

        Scratch() :
            dir(fs::temp_directory_path() / "minhom-cli-tests")
        {
            fs::remove_all(dir);
            fs::create_directories(dir);
        }

        ~Scratch()
        {
            fs::remove_all(dir);
        }

        auto file(const string & name, const string & content) const -> string
        {
            minhom::write_file(dir / name, content);
            return (dir / name).string();
        }
    };

    auto contains(const string & haystack, const string & needle) -> bool
    {
        return haystack.find(needle) != string::npos;
    }
}

TEST_CASE("classify exit codes and verdicts")
{
    Scratch s;
    auto c4 = s.file("c4.digraph", "digraph c4\nvertices: a b c d\narcs: a->b b->a b->c c->b c->d d->c d->a a->d\nreflexive\n");
    auto r = run("classify " + c4);
    CHECK(r.status == 2);
    CHECK(contains(r.output, "verdict: NP-complete"));
    CHECK(contains(r.output, "induced C4 in S(H)"));

    auto loop = s.file("loop.digraph", "digraph one\nvertices: a\narcs: a->a\n");
    auto p = run("classify " + loop);
    CHECK(p.status == 0);
    CHECK(contains(p.output, "verdict: polynomial"));
    CHECK(contains(p.output, "ordering: a\n"));

    auto again = run("--parallel 2 classify " + c4);
    CHECK(again.output == r.output);

    auto bad = s.file("bad.digraph", "digraph bad\nvertices: a\narcs: a->c\n");
    auto e = run("classify " + bad);
    CHECK(e.status == 1);
    CHECK(contains(e.output, "unknown vertex"));

    CHECK(run("classify " + (s.dir / "missing.digraph").string()).status == 1);
    CHECK(run("no-such-command").status == 1);
}

TEST_CASE("ordering prints an ordering or a certificate")
{
    Scratch s;
    auto tt = s.file("tt.digraph", "digraph tt\nvertices: a b c\narcs: a->b a->c b->c\nreflexive\n");
    auto r = run("ordering " + tt);
    CHECK(r.status == 0);
    CHECK(contains(r.output, "a b c"));
}

TEST_CASE("solve prints the assignment and the exact cost")
{
    Scratch s;
    auto h = s.file("h.digraph", "digraph h\nvertices: a b\narcs: a->a b->b a->b\n");
    auto g = s.file("g.digraph", "digraph g\nvertices: u v\narcs: u->v\n");
    auto c = s.file("c.csv", "cost,a,b\nu,0,10\nv,10,0\n");
    auto r = run("solve --template " + h + " --instance " + g + " --costs " + c);
    CHECK(r.status == 0);
    CHECK(contains(r.output, "u -> a"));
    CHECK(contains(r.output, "v -> b"));
    CHECK(contains(r.output, "cost: 0\n"));

    auto third = s.file("third.csv", "cost,a,b\nu,1/3,10\nv,10,1/3\n");
    CHECK(contains(run("solve --template " + h + " --instance " + g + " --costs " + third).output, "cost: 2/3\n"));

    auto missing = s.file("missing.csv", "cost,a\nu,0\nv,0\n");
    auto e = run("solve --template " + h + " --instance " + g + " --costs " + missing);
    CHECK(e.status == 1);
    CHECK(contains(e.output, "dimension mismatch"));

    auto c4 = s.file("c4.digraph", "digraph c4\nvertices: a b c d\narcs: a->b b->a b->c c->b c->d d->c d->a a->d\nreflexive\n");
    auto cc = s.file("cc.csv", "cost,a,b,c,d\nu,0,1,2,3\nv,3,2,1,0\n");
    CHECK(run("solve --template " + c4 + " --instance " + g + " --costs " + cc).status == 2);
    auto brute = run("solve --template " + c4 + " --instance " + g + " --costs " + cc + " --bruteforce");
    CHECK(brute.status == 0);
    CHECK(contains(brute.output, "u -> a"));
    CHECK(contains(brute.output, "v -> d"));
    CHECK(contains(brute.output, "cost: 0\n"));
}

TEST_CASE("catalog, reduce and export-dot write files")
{
    Scratch s;
    auto r = run("catalog --max-size 4 --out " + (s.dir / "cat").string());
    CHECK(r.status == 0);
    CHECK(fs::exists(s.dir / "cat" / "index.txt"));
    CHECK(fs::exists(s.dir / "cat" / "member0.digraph"));

    auto x = s.file("x.txt", "graph x\nU: a\nV: b\nW: c\nedges: a-b b-c a-c\n");
    auto red = run("reduce --obstruction h4 --input " + x + " --k 1 --out " + (s.dir / "gadget").string());
    CHECK(red.status == 0);
    CHECK(fs::exists(s.dir / "gadget" / "instance.digraph"));
    CHECK(minhom::read_file(s.dir / "gadget" / "budget.txt").find("2") != string::npos);
    CHECK(run("reduce --obstruction h1 --input " + x + " --k 1 --out " + (s.dir / "g1").string()).status == 1);

    auto c4 = s.file("c4.digraph", "digraph c4\nvertices: a b c d\narcs: a->b b->a b->c c->b c->d d->c d->a a->d\nreflexive\n");
    auto dot = run("export-dot " + c4);
    CHECK(dot.status == 0);
    CHECK(contains(dot.output, "digraph"));
}

TEST_CASE("verify-theorem reports no mismatches")
{
    auto r = run("verify-theorem --max-n 3");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "mismatches: 0"));
    CHECK(run("verify-theorem --max-n 9").status == 1);
}

TEST_CASE("selftest passes")
{
    auto r = run("--seed 7 selftest --trials 50");
    CHECK(r.status == 0);
}
