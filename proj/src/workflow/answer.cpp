#include "verisearch/workflow/answer.hpp"

#include <cctype>

#include "verisearch/util/strings.hpp"

namespace verisearch {

namespace {

// Last maximal digit run (with optional sign) in the text.
std::string last_integer(const std::string& text) {
    std::string best;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::string run = text.substr(start, i - start);
            if (start > 0 && text[start - 1] == '-') run = "-" + run;
            best = run;
        } else {
            ++i;
        }
    }
    return best;
}

std::string strip_number_noise(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == ',' || c == '$' || c == '%' || std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        out += c;
    }
    return out;
}

bool is_numeric_answer(const std::string& stripped, long long& as_int) {
    if (util::parse_int(stripped, as_int)) return true;
    return false;
}

std::string normalize_string_answer(const std::string& s) {
    std::string lowered = util::to_lower(util::trim(s));
    std::string out;
    std::string word;
    auto flush = [&] {
        if (word.empty()) return;
        if (word != "a" && word != "an" && word != "the") {
            if (!out.empty()) out += ' ';
            out += word;
        }
        word.clear();
    };
    for (char c : lowered) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            word += c;
        }
    }
    flush();
    return out;
}

}  // namespace

std::string normalize_answer(const std::string& answer, TaskType task_type) {
    std::string trimmed = util::trim(answer);
    if (trimmed.empty()) return "";
    std::string stripped = strip_number_noise(trimmed);
    long long as_int = 0;
    if (task_type == TaskType::Math) {
        if (is_numeric_answer(stripped, as_int)) return std::to_string(as_int);
        std::string tail = last_integer(trimmed);
        if (!tail.empty() && util::parse_int(tail, as_int)) return std::to_string(as_int);
        return "";
    }
    if (is_numeric_answer(stripped, as_int)) return std::to_string(as_int);
    return normalize_string_answer(trimmed);
}

FinalAnswer extract_answer(const std::string& raw, TaskType task_type) {
    FinalAnswer answer;
    answer.text = raw;

    if (task_type == TaskType::Agentic) {
        // Innermost span: last opening tag, first close after it.
        size_t open = raw.rfind("<answer>");
        if (open != std::string::npos) {
            size_t begin = open + 8;
            size_t end = raw.find("</answer>", begin);
            if (end != std::string::npos) {
                answer.extracted = normalize_answer(raw.substr(begin, end - begin),
                                                    TaskType::Agentic);
                answer.answered = !answer.extracted.empty();
                return answer;
            }
        }
        return answer;
    }

    // Math: prefer the last boxed{...} with an integer inside.
    size_t boxed = raw.rfind("boxed{");
    if (boxed != std::string::npos) {
        size_t begin = boxed + 6;
        size_t end = raw.find('}', begin);
        if (end != std::string::npos) {
            std::string inner = normalize_answer(raw.substr(begin, end - begin),
                                                 TaskType::Math);
            if (!inner.empty()) {
                answer.extracted = inner;
                answer.answered = true;
                return answer;
            }
        }
    }
    std::string tail = last_integer(raw);
    long long value = 0;
    if (!tail.empty() && util::parse_int(tail, value)) {
        answer.extracted = std::to_string(value);
        answer.answered = true;
    }
    return answer;
}

bool grade_answer(const FinalAnswer& answer, const std::string& gold, TaskType task_type) {
    if (!answer.answered) return false;
    std::string want = normalize_answer(gold, task_type);
    if (want.empty()) return false;
    return answer.extracted == want;
}

}  // namespace verisearch
