#pragma once

#include <string>

#include "verisearch/core/types.hpp"

namespace verisearch {

// Raw model output plus the extracted, normalized answer. `answered` is false
// when no answer could be located.
struct FinalAnswer {
    std::string text;
    std::string extracted;
    bool answered = false;
};

// Math: last boxed{...} integer, else the last integer anywhere in the text.
// Agentic: innermost <answer>...</answer> span, normalized per the answer-tag
// rules (numbers lose commas and unit signs; strings lose articles and case).
FinalAnswer extract_answer(const std::string& raw, TaskType task_type);

std::string normalize_answer(const std::string& answer, TaskType task_type);

// Exact match on extracted vs gold after normalizing both.
bool grade_answer(const FinalAnswer& answer, const std::string& gold, TaskType task_type);

}  // namespace verisearch
