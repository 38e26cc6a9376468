#pragma once

namespace aritylab {

inline constexpr const char* kToolName = "aritylab";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "aritylab-report/1";

}  // namespace aritylab
