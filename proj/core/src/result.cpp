#include "cohom/result.hpp"

#include <stdexcept>

namespace cohom {

const char* method_name(Method m)
{
    switch (m) {
    case Method::Closed:
        return "closed";
    case Method::Summary:
        return "summary";
    case Method::System:
        return "system";
    case Method::Oracle:
        return "oracle";
    }
    return "?";
}

Method parse_method(const std::string& name)
{
    for (Method m : {Method::Closed, Method::Summary, Method::System, Method::Oracle})
        if (name == method_name(m))
            return m;
    throw std::invalid_argument("unknown method '" + name + "' (expected closed, summary, system or oracle)");
}

} // namespace cohom
