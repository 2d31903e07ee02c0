use cognate_core::Language;

/// (language, script code point, Devanagari code point) for letters whose
/// Unicode names differ only in the script prefix.
pub const SPOTS: &[(Language, u32, u32)] = &[
    (Language::Bn, 0x0985, 0x0905), (Language::Bn, 0x0986, 0x0906), (Language::Bn, 0x0987, 0x0907), (Language::Bn, 0x0988, 0x0908),
    (Language::Bn, 0x0989, 0x0909), (Language::Bn, 0x098A, 0x090A), (Language::Bn, 0x098B, 0x090B), (Language::Bn, 0x098C, 0x090C),
    (Language::Bn, 0x098F, 0x090F), (Language::Bn, 0x0990, 0x0910), (Language::Bn, 0x0993, 0x0913), (Language::Bn, 0x0994, 0x0914),
    (Language::Bn, 0x0995, 0x0915), (Language::Bn, 0x0996, 0x0916), (Language::Bn, 0x0997, 0x0917), (Language::Bn, 0x0998, 0x0918),
    (Language::Bn, 0x0999, 0x0919), (Language::Bn, 0x099A, 0x091A), (Language::Bn, 0x099B, 0x091B), (Language::Bn, 0x099C, 0x091C),
    (Language::Bn, 0x099D, 0x091D), (Language::Bn, 0x099E, 0x091E), (Language::Bn, 0x099F, 0x091F), (Language::Bn, 0x09A0, 0x0920),
    (Language::Bn, 0x09A1, 0x0921), (Language::Bn, 0x09A2, 0x0922), (Language::Bn, 0x09A3, 0x0923), (Language::Bn, 0x09A4, 0x0924),
    (Language::Bn, 0x09A5, 0x0925), (Language::Bn, 0x09A6, 0x0926), (Language::Bn, 0x09A7, 0x0927), (Language::Bn, 0x09A8, 0x0928),
    (Language::Bn, 0x09AA, 0x092A), (Language::Bn, 0x09AB, 0x092B), (Language::Bn, 0x09AC, 0x092C), (Language::Bn, 0x09AD, 0x092D),
    (Language::Bn, 0x09AE, 0x092E), (Language::Bn, 0x09AF, 0x092F), (Language::Bn, 0x09B0, 0x0930), (Language::Bn, 0x09B2, 0x0932),
    (Language::Bn, 0x09B6, 0x0936), (Language::Bn, 0x09B7, 0x0937), (Language::Bn, 0x09B8, 0x0938), (Language::Bn, 0x09B9, 0x0939),
    (Language::Bn, 0x09BE, 0x093E), (Language::Bn, 0x09BF, 0x093F), (Language::Bn, 0x09C0, 0x0940), (Language::Bn, 0x09C1, 0x0941),
    (Language::Bn, 0x09C2, 0x0942), (Language::Bn, 0x09C3, 0x0943), (Language::Bn, 0x09C4, 0x0944), (Language::Bn, 0x09C7, 0x0947),
    (Language::Bn, 0x09C8, 0x0948), (Language::Bn, 0x09CB, 0x094B), (Language::Bn, 0x09CC, 0x094C), (Language::Bn, 0x09CD, 0x094D),
    (Language::Bn, 0x09DD, 0x095D), (Language::Bn, 0x09DF, 0x095F), (Language::Bn, 0x09E0, 0x0960), (Language::Bn, 0x09E1, 0x0961),
    (Language::Bn, 0x09E2, 0x0962), (Language::Bn, 0x09E3, 0x0963),
    (Language::Pa, 0x0A05, 0x0905), (Language::Pa, 0x0A06, 0x0906), (Language::Pa, 0x0A07, 0x0907), (Language::Pa, 0x0A08, 0x0908),
    (Language::Pa, 0x0A09, 0x0909), (Language::Pa, 0x0A0A, 0x090A), (Language::Pa, 0x0A10, 0x0910), (Language::Pa, 0x0A14, 0x0914),
    (Language::Pa, 0x0A15, 0x0915), (Language::Pa, 0x0A16, 0x0916), (Language::Pa, 0x0A17, 0x0917), (Language::Pa, 0x0A18, 0x0918),
    (Language::Pa, 0x0A19, 0x0919), (Language::Pa, 0x0A1A, 0x091A), (Language::Pa, 0x0A1B, 0x091B), (Language::Pa, 0x0A1C, 0x091C),
    (Language::Pa, 0x0A1D, 0x091D), (Language::Pa, 0x0A1E, 0x091E), (Language::Pa, 0x0A1F, 0x091F), (Language::Pa, 0x0A20, 0x0920),
    (Language::Pa, 0x0A21, 0x0921), (Language::Pa, 0x0A22, 0x0922), (Language::Pa, 0x0A23, 0x0923), (Language::Pa, 0x0A24, 0x0924),
    (Language::Pa, 0x0A25, 0x0925), (Language::Pa, 0x0A26, 0x0926), (Language::Pa, 0x0A27, 0x0927), (Language::Pa, 0x0A28, 0x0928),
    (Language::Pa, 0x0A2A, 0x092A), (Language::Pa, 0x0A2B, 0x092B), (Language::Pa, 0x0A2C, 0x092C), (Language::Pa, 0x0A2D, 0x092D),
    (Language::Pa, 0x0A2E, 0x092E), (Language::Pa, 0x0A2F, 0x092F), (Language::Pa, 0x0A30, 0x0930), (Language::Pa, 0x0A32, 0x0932),
    (Language::Pa, 0x0A33, 0x0933), (Language::Pa, 0x0A35, 0x0935), (Language::Pa, 0x0A36, 0x0936), (Language::Pa, 0x0A38, 0x0938),
    (Language::Pa, 0x0A39, 0x0939), (Language::Pa, 0x0A3E, 0x093E), (Language::Pa, 0x0A3F, 0x093F), (Language::Pa, 0x0A40, 0x0940),
    (Language::Pa, 0x0A41, 0x0941), (Language::Pa, 0x0A42, 0x0942), (Language::Pa, 0x0A48, 0x0948), (Language::Pa, 0x0A4C, 0x094C),
    (Language::Pa, 0x0A4D, 0x094D), (Language::Pa, 0x0A59, 0x0959), (Language::Pa, 0x0A5A, 0x095A), (Language::Pa, 0x0A5B, 0x095B),
    (Language::Pa, 0x0A5E, 0x095E),
    (Language::Gu, 0x0A85, 0x0905), (Language::Gu, 0x0A86, 0x0906), (Language::Gu, 0x0A87, 0x0907), (Language::Gu, 0x0A88, 0x0908),
    (Language::Gu, 0x0A89, 0x0909), (Language::Gu, 0x0A8A, 0x090A), (Language::Gu, 0x0A8B, 0x090B), (Language::Gu, 0x0A8C, 0x090C),
    (Language::Gu, 0x0A8F, 0x090F), (Language::Gu, 0x0A90, 0x0910), (Language::Gu, 0x0A93, 0x0913), (Language::Gu, 0x0A94, 0x0914),
    (Language::Gu, 0x0A95, 0x0915), (Language::Gu, 0x0A96, 0x0916), (Language::Gu, 0x0A97, 0x0917), (Language::Gu, 0x0A98, 0x0918),
    (Language::Gu, 0x0A99, 0x0919), (Language::Gu, 0x0A9A, 0x091A), (Language::Gu, 0x0A9B, 0x091B), (Language::Gu, 0x0A9C, 0x091C),
    (Language::Gu, 0x0A9D, 0x091D), (Language::Gu, 0x0A9E, 0x091E), (Language::Gu, 0x0A9F, 0x091F), (Language::Gu, 0x0AA0, 0x0920),
    (Language::Gu, 0x0AA1, 0x0921), (Language::Gu, 0x0AA2, 0x0922), (Language::Gu, 0x0AA3, 0x0923), (Language::Gu, 0x0AA4, 0x0924),
    (Language::Gu, 0x0AA5, 0x0925), (Language::Gu, 0x0AA6, 0x0926), (Language::Gu, 0x0AA7, 0x0927), (Language::Gu, 0x0AA8, 0x0928),
    (Language::Gu, 0x0AAA, 0x092A), (Language::Gu, 0x0AAB, 0x092B), (Language::Gu, 0x0AAC, 0x092C), (Language::Gu, 0x0AAD, 0x092D),
    (Language::Gu, 0x0AAE, 0x092E), (Language::Gu, 0x0AAF, 0x092F), (Language::Gu, 0x0AB0, 0x0930), (Language::Gu, 0x0AB2, 0x0932),
    (Language::Gu, 0x0AB3, 0x0933), (Language::Gu, 0x0AB5, 0x0935), (Language::Gu, 0x0AB6, 0x0936), (Language::Gu, 0x0AB7, 0x0937),
    (Language::Gu, 0x0AB8, 0x0938), (Language::Gu, 0x0AB9, 0x0939), (Language::Gu, 0x0ABE, 0x093E), (Language::Gu, 0x0ABF, 0x093F),
    (Language::Gu, 0x0AC0, 0x0940), (Language::Gu, 0x0AC1, 0x0941), (Language::Gu, 0x0AC2, 0x0942), (Language::Gu, 0x0AC3, 0x0943),
    (Language::Gu, 0x0AC4, 0x0944), (Language::Gu, 0x0AC5, 0x0945), (Language::Gu, 0x0AC7, 0x0947), (Language::Gu, 0x0AC8, 0x0948),
    (Language::Gu, 0x0AC9, 0x0949), (Language::Gu, 0x0ACB, 0x094B), (Language::Gu, 0x0ACC, 0x094C), (Language::Gu, 0x0ACD, 0x094D),
    (Language::Gu, 0x0AE0, 0x0960), (Language::Gu, 0x0AE1, 0x0961), (Language::Gu, 0x0AE2, 0x0962), (Language::Gu, 0x0AE3, 0x0963),
    (Language::Gu, 0x0AF9, 0x0979),
    (Language::Ta, 0x0B85, 0x0905), (Language::Ta, 0x0B86, 0x0906), (Language::Ta, 0x0B87, 0x0907), (Language::Ta, 0x0B88, 0x0908),
    (Language::Ta, 0x0B89, 0x0909), (Language::Ta, 0x0B8A, 0x090A), (Language::Ta, 0x0B90, 0x0910), (Language::Ta, 0x0B94, 0x0914),
    (Language::Ta, 0x0B95, 0x0915), (Language::Ta, 0x0B99, 0x0919), (Language::Ta, 0x0B9A, 0x091A), (Language::Ta, 0x0B9C, 0x091C),
    (Language::Ta, 0x0B9E, 0x091E), (Language::Ta, 0x0B9F, 0x091F), (Language::Ta, 0x0BA3, 0x0923), (Language::Ta, 0x0BA4, 0x0924),
    (Language::Ta, 0x0BA8, 0x0928), (Language::Ta, 0x0BA9, 0x0929), (Language::Ta, 0x0BAA, 0x092A), (Language::Ta, 0x0BAE, 0x092E),
    (Language::Ta, 0x0BAF, 0x092F), (Language::Ta, 0x0BB0, 0x0930), (Language::Ta, 0x0BB1, 0x0931), (Language::Ta, 0x0BB2, 0x0932),
    (Language::Ta, 0x0BB3, 0x0933), (Language::Ta, 0x0BB4, 0x0934), (Language::Ta, 0x0BB5, 0x0935), (Language::Ta, 0x0BB6, 0x0936),
    (Language::Ta, 0x0BB7, 0x0937), (Language::Ta, 0x0BB8, 0x0938), (Language::Ta, 0x0BB9, 0x0939), (Language::Ta, 0x0BBE, 0x093E),
    (Language::Ta, 0x0BBF, 0x093F), (Language::Ta, 0x0BC0, 0x0940), (Language::Ta, 0x0BC1, 0x0941), (Language::Ta, 0x0BC2, 0x0942),
    (Language::Ta, 0x0BC8, 0x0948), (Language::Ta, 0x0BCC, 0x094C), (Language::Ta, 0x0BCD, 0x094D),
    (Language::Te, 0x0C05, 0x0905), (Language::Te, 0x0C06, 0x0906), (Language::Te, 0x0C07, 0x0907), (Language::Te, 0x0C08, 0x0908),
    (Language::Te, 0x0C09, 0x0909), (Language::Te, 0x0C0A, 0x090A), (Language::Te, 0x0C0B, 0x090B), (Language::Te, 0x0C0C, 0x090C),
    (Language::Te, 0x0C10, 0x0910), (Language::Te, 0x0C14, 0x0914), (Language::Te, 0x0C15, 0x0915), (Language::Te, 0x0C16, 0x0916),
    (Language::Te, 0x0C17, 0x0917), (Language::Te, 0x0C18, 0x0918), (Language::Te, 0x0C19, 0x0919), (Language::Te, 0x0C1A, 0x091A),
    (Language::Te, 0x0C1B, 0x091B), (Language::Te, 0x0C1C, 0x091C), (Language::Te, 0x0C1D, 0x091D), (Language::Te, 0x0C1E, 0x091E),
    (Language::Te, 0x0C1F, 0x091F), (Language::Te, 0x0C20, 0x0920), (Language::Te, 0x0C21, 0x0921), (Language::Te, 0x0C22, 0x0922),
    (Language::Te, 0x0C23, 0x0923), (Language::Te, 0x0C24, 0x0924), (Language::Te, 0x0C25, 0x0925), (Language::Te, 0x0C26, 0x0926),
    (Language::Te, 0x0C27, 0x0927), (Language::Te, 0x0C28, 0x0928), (Language::Te, 0x0C2A, 0x092A), (Language::Te, 0x0C2B, 0x092B),
    (Language::Te, 0x0C2C, 0x092C), (Language::Te, 0x0C2D, 0x092D), (Language::Te, 0x0C2E, 0x092E), (Language::Te, 0x0C2F, 0x092F),
    (Language::Te, 0x0C30, 0x0930), (Language::Te, 0x0C31, 0x0931), (Language::Te, 0x0C32, 0x0932), (Language::Te, 0x0C33, 0x0933),
    (Language::Te, 0x0C34, 0x0934), (Language::Te, 0x0C35, 0x0935), (Language::Te, 0x0C36, 0x0936), (Language::Te, 0x0C37, 0x0937),
    (Language::Te, 0x0C38, 0x0938), (Language::Te, 0x0C39, 0x0939), (Language::Te, 0x0C3E, 0x093E), (Language::Te, 0x0C3F, 0x093F),
    (Language::Te, 0x0C40, 0x0940), (Language::Te, 0x0C41, 0x0941), (Language::Te, 0x0C42, 0x0942), (Language::Te, 0x0C43, 0x0943),
    (Language::Te, 0x0C44, 0x0944), (Language::Te, 0x0C48, 0x0948), (Language::Te, 0x0C4C, 0x094C), (Language::Te, 0x0C4D, 0x094D),
    (Language::Te, 0x0C60, 0x0960), (Language::Te, 0x0C61, 0x0961), (Language::Te, 0x0C62, 0x0962), (Language::Te, 0x0C63, 0x0963),
    (Language::Ml, 0x0D05, 0x0905), (Language::Ml, 0x0D06, 0x0906), (Language::Ml, 0x0D07, 0x0907), (Language::Ml, 0x0D08, 0x0908),
    (Language::Ml, 0x0D09, 0x0909), (Language::Ml, 0x0D0A, 0x090A), (Language::Ml, 0x0D0B, 0x090B), (Language::Ml, 0x0D0C, 0x090C),
    (Language::Ml, 0x0D10, 0x0910), (Language::Ml, 0x0D14, 0x0914), (Language::Ml, 0x0D15, 0x0915), (Language::Ml, 0x0D16, 0x0916),
    (Language::Ml, 0x0D17, 0x0917), (Language::Ml, 0x0D18, 0x0918), (Language::Ml, 0x0D19, 0x0919), (Language::Ml, 0x0D1A, 0x091A),
    (Language::Ml, 0x0D1B, 0x091B), (Language::Ml, 0x0D1C, 0x091C), (Language::Ml, 0x0D1D, 0x091D), (Language::Ml, 0x0D1E, 0x091E),
    (Language::Ml, 0x0D1F, 0x091F), (Language::Ml, 0x0D20, 0x0920), (Language::Ml, 0x0D21, 0x0921), (Language::Ml, 0x0D22, 0x0922),
    (Language::Ml, 0x0D23, 0x0923), (Language::Ml, 0x0D24, 0x0924), (Language::Ml, 0x0D25, 0x0925), (Language::Ml, 0x0D26, 0x0926),
    (Language::Ml, 0x0D27, 0x0927), (Language::Ml, 0x0D28, 0x0928), (Language::Ml, 0x0D29, 0x0929), (Language::Ml, 0x0D2A, 0x092A),
    (Language::Ml, 0x0D2B, 0x092B), (Language::Ml, 0x0D2C, 0x092C), (Language::Ml, 0x0D2D, 0x092D), (Language::Ml, 0x0D2E, 0x092E),
    (Language::Ml, 0x0D2F, 0x092F), (Language::Ml, 0x0D30, 0x0930), (Language::Ml, 0x0D31, 0x0931), (Language::Ml, 0x0D32, 0x0932),
    (Language::Ml, 0x0D33, 0x0933), (Language::Ml, 0x0D34, 0x0934), (Language::Ml, 0x0D35, 0x0935), (Language::Ml, 0x0D36, 0x0936),
    (Language::Ml, 0x0D37, 0x0937), (Language::Ml, 0x0D38, 0x0938), (Language::Ml, 0x0D39, 0x0939), (Language::Ml, 0x0D3E, 0x093E),
    (Language::Ml, 0x0D3F, 0x093F), (Language::Ml, 0x0D40, 0x0940), (Language::Ml, 0x0D41, 0x0941), (Language::Ml, 0x0D42, 0x0942),
    (Language::Ml, 0x0D43, 0x0943), (Language::Ml, 0x0D44, 0x0944), (Language::Ml, 0x0D48, 0x0948), (Language::Ml, 0x0D4C, 0x094C),
    (Language::Ml, 0x0D4D, 0x094D), (Language::Ml, 0x0D60, 0x0960), (Language::Ml, 0x0D61, 0x0961), (Language::Ml, 0x0D62, 0x0962),
    (Language::Ml, 0x0D63, 0x0963),
];
