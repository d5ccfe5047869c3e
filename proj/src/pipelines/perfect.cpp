#include "rcyclo/pipelines.hpp"

namespace rcyclo {

PerfectReport tcr_perfect(std::uint32_t p, unsigned n, unsigned m) {
    PerfectReport r;
    r.answer = tcr_perfect_answer(p, n, m);
    r.mackey_pi0 = describe(r.answer.kernel_mackey);
    r.mackey_pim1 = describe(r.answer.cokernel_mackey);
    return r;
}

}  // namespace rcyclo
