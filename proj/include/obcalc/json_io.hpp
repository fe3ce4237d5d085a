#pragma once

// The shared JSON dialect: open book description files (optionally carrying
// an embedded intersection-form block), invariant record files, standalone
// form files and the d3 report document.

#include "obcalc/invariants.hpp"
#include "obcalc/lefschetz.hpp"
#include "obcalc/surface.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace obcalc {

struct BookFile {
    OpenBookDesc book;
    std::optional<FormOnBasis> form;
};

BookFile parse_book_json(const nlohmann::json& j);
BookFile load_book_file(const std::string& path);
nlohmann::json book_file_to_json(const BookFile& f);

FormOnBasis parse_form_json(const nlohmann::json& j);
FormOnBasis load_form_file(const std::string& path);

InvariantRecord parse_record_json(const nlohmann::json& j);
InvariantRecord load_record_file(const std::string& path);
nlohmann::json record_to_json(const InvariantRecord& rec);

nlohmann::json d3_report_to_json(const D3Report& report);

} // namespace obcalc
