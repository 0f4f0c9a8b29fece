#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "randcert/bitstring.hpp"

namespace randcert::tinypf {

// Two-register counter machine with self-delimiting codes. Instructions are
// 3-bit opcodes read in stream order; the two conditional jumps carry a 3-bit
// backward offset. A code is an accepted program exactly when the first END
// lands on the final bit.
//
//   000 END    001 INC A   010 INC B   011 DECJNZ A (+3 offset bits)
//   100 DECJNZ B (+3 offset bits)      101 OUT0     110 OUT1     111 NOP
//
// DECJNZ r: decrement r if positive; if r is still positive, jump back
// offset+1 instructions.
enum class Op : uint8_t { end, inc_a, inc_b, dec_jnz_a, dec_jnz_b, out0, out1, nop };

struct Instruction {
  Op op = Op::nop;
  uint8_t jump_back = 0;  // dec_jnz only: distance 1..8

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct Program {
  BitString code;
  std::vector<Instruction> instructions;  // nonempty; last is always END
};

enum class RejectReason : uint8_t {
  truncated_opcode,          // code stops inside an opcode or offset field
  trailing_bits_after_end,   // END landed before the final bit
  no_end_before_exhaustion,  // clean instruction boundary, END never seen
  jump_before_start,         // backward jump would pass instruction 0
};

std::string_view reject_reason_name(RejectReason r);

struct DecodeResult {
  std::optional<Program> program;      // engaged iff accepted
  std::optional<RejectReason> reason;  // engaged iff rejected

  bool accepted() const { return program.has_value(); }
  // Rejected codes that some extension could still turn into a program.
  bool extendable() const {
    return reason == RejectReason::truncated_opcode ||
           reason == RejectReason::no_end_before_exhaustion;
  }
};

DecodeResult decode_program(const BitString& code);

// Full state of a running machine; steps_used never exceeds the budget
// handed to run().
struct MachineState {
  size_t instruction_pointer = 0;
  uint64_t reg_a = 0;
  uint64_t reg_b = 0;
  BitStringBuilder output;
  uint64_t steps_used = 0;
};

struct RunOutcome {
  enum class Status : uint8_t { halted, budget_exhausted };
  Status status = Status::budget_exhausted;
  BitString output;
  uint64_t steps_used = 0;
};

// Executes from instruction 0, one step per instruction (a taken jump is
// still one step). budget must be >= 1.
RunOutcome run(const Program& p, uint64_t budget);

}  // namespace randcert::tinypf
