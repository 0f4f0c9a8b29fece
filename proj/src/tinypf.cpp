#include "randcert/tinypf.hpp"

#include <stdexcept>

namespace randcert::tinypf {

std::string_view reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::truncated_opcode: return "truncated_opcode";
    case RejectReason::trailing_bits_after_end: return "trailing_bits_after_end";
    case RejectReason::no_end_before_exhaustion: return "no_end_before_exhaustion";
    case RejectReason::jump_before_start: return "jump_before_start";
  }
  return "?";
}

DecodeResult decode_program(const BitString& code) {
  const size_t len = code.size();
  auto reject = [](RejectReason r) {
    return DecodeResult{std::nullopt, r};
  };
  std::vector<Instruction> instructions;
  size_t pos = 0;
  auto field3 = [&](size_t at) {
    return unsigned(code.bit(at)) << 2 | unsigned(code.bit(at + 1)) << 1 |
           unsigned(code.bit(at + 2));
  };
  while (true) {
    if (pos == len) return reject(RejectReason::no_end_before_exhaustion);
    if (len - pos < 3) return reject(RejectReason::truncated_opcode);
    Op op = Op(field3(pos));
    pos += 3;
    Instruction ins{op, 0};
    if (op == Op::dec_jnz_a || op == Op::dec_jnz_b) {
      if (len - pos < 3) return reject(RejectReason::truncated_opcode);
      ins.jump_back = uint8_t(field3(pos) + 1);  // distance 1..8
      pos += 3;
      if (ins.jump_back > instructions.size())
        return reject(RejectReason::jump_before_start);
    }
    instructions.push_back(ins);
    if (op == Op::end) {
      if (pos != len) return reject(RejectReason::trailing_bits_after_end);
      return DecodeResult{Program{code, std::move(instructions)}, std::nullopt};
    }
  }
}

RunOutcome run(const Program& p, uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("run budget must be >= 1");
  if (p.instructions.empty() || p.instructions.back().op != Op::end)
    throw std::invalid_argument("run requires an accepted program");
  MachineState m;
  while (m.steps_used < budget) {
    const Instruction& ins = p.instructions[m.instruction_pointer];
    ++m.steps_used;
    switch (ins.op) {
      case Op::end:
        return {RunOutcome::Status::halted, m.output.build(), m.steps_used};
      case Op::inc_a:
        ++m.reg_a;
        break;
      case Op::inc_b:
        ++m.reg_b;
        break;
      case Op::dec_jnz_a:
        if (m.reg_a > 0 && --m.reg_a > 0) {
          m.instruction_pointer -= ins.jump_back;
          continue;
        }
        break;
      case Op::dec_jnz_b:
        if (m.reg_b > 0 && --m.reg_b > 0) {
          m.instruction_pointer -= ins.jump_back;
          continue;
        }
        break;
      case Op::out0:
        m.output.push(false);
        break;
      case Op::out1:
        m.output.push(true);
        break;
      case Op::nop:
        break;
    }
    ++m.instruction_pointer;
  }
  return {RunOutcome::Status::budget_exhausted, m.output.build(), m.steps_used};
}

}  // namespace randcert::tinypf
