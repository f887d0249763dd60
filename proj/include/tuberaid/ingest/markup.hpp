#pragma once

#include <string>
#include <string_view>

namespace tuberaid::ingest {

// Decodes named (&amp; &lt; &gt; &quot; &apos; &nbsp;) and numeric (&#39;
// &#x27;) character references. Unknown references are kept verbatim.
std::string decode_entities(std::string_view text);

// Removes tags and decodes entities. Line-breaking tags (<br>, </p>, </div>,
// </li>) become a newline; <wbr> and all other tags vanish without a trace so
// that URLs split by soft breaks are rejoined.
std::string strip_markup(std::string_view html);

} // namespace tuberaid::ingest
