"""Status codes shared by the varint codec backends."""

VB_OK = 0
VB_TRUNCATED = 1   # stream ends inside a value (continuation bit on last byte)
VB_COUNT = 2       # terminator count does not match the expected value count
VB_OVERLONG = 3    # a value spans more than 5 bytes
VB_RANGE = 4       # decoded value does not fit in 32 bits

VB_MESSAGES = {
    VB_TRUNCATED: "truncated value: stream ends with continuation bit set",
    VB_COUNT: "value count mismatch (missing values or trailing bytes)",
    VB_OVERLONG: "value spans more than 5 bytes",
    VB_RANGE: "decoded value exceeds 32 bits",
}
