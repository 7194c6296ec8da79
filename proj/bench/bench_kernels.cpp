// Serial vs parallel timings of the main kernels.
#include <chrono>
#include <cstdio>
#include <functional>

#include "efl/explicit_formula.hpp"
#include "efl/lseries.hpp"
#include "efl/zeros.hpp"

using namespace efl;

static double time_it(const std::function<void()>& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

static void row(const char* name, const std::function<void(Exec)>& f, int reps) {
    const double s = time_it([&] { f(Exec::Serial); }, reps);
    const double p = time_it([&] { f(Exec::Parallel); }, reps);
    std::printf("%-34s serial %9.4fs  parallel %9.4fs  speedup %5.2fx\n", name, s, p, s / p);
}

int main() {
    std::printf("threads: %d\n", thread_count());
    const auto zeta = CompletedLFunction::riemann();
    const auto dk = CompletedLFunction::dedekind_cyclotomic(5);
    const TestFunction a(1.0, 0.6);
    const ZeroList z = find_zeros(zeta, 400.0);

    row("box count zeta [-0.1,1.1]x[-200,200]", [&](Exec e) { count_zeros_in_box(zeta, {-0.1, 1.1, -200.0, 200.0}, e); }, 2);
    row("box count Q(zeta5) |Im|<=60", [&](Exec e) { count_zeros_in_box(dk, {-0.1, 1.1, -60.0, 60.0}, e); }, 2);
    row("find zeros zeta T=200", [&](Exec e) {
        ZeroSearchOptions o;
        o.exec = e;
        find_zeros(zeta, 200.0, o);
    }, 2);
    row("zero sum (T=400 list)", [&](Exec e) { zero_sum(z, a, e); }, 20);
    row("EFK geometric side m=60, reach 8", [&](Exec e) { geometric_side_efk(60, TestFunction(6.0, 2.0), 3000, e); }, 3);
    return 0;
}
