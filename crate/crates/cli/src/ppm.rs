//! Plain-text P3 image output with a fixed 256-entry color ramp.

/// Ramp anchors, dark blue through teal and green to yellow, linearly
/// interpolated. The lookup is pure integer arithmetic, so output bytes are
/// identical across platforms.
const ANCHORS: [(u16, [u16; 3]); 5] = [
    (0, [68, 1, 84]),
    (64, [59, 82, 139]),
    (128, [33, 145, 140]),
    (192, [94, 201, 98]),
    (255, [253, 231, 37]),
];

pub fn ramp(index: u8) -> [u8; 3] {
    let idx = index as u16;
    let mut segment = (ANCHORS[0], ANCHORS[1]);
    for window in ANCHORS.windows(2) {
        if idx >= window[0].0 && idx <= window[1].0 {
            segment = (window[0], window[1]);
            break;
        }
    }
    let ((lo, a), (hi, b)) = segment;
    let span = hi - lo;
    let t = idx - lo;
    let mut rgb = [0u8; 3];
    for ch in 0..3 {
        let a = a[ch] as i32;
        let b = b[ch] as i32;
        rgb[ch] = (a + (b - a) * t as i32 / span as i32) as u8;
    }
    rgb
}

/// Scale a cell value in `[0, max]` onto the ramp index range.
pub fn scale(value: u64, max: u64) -> u8 {
    if max == 0 {
        0
    } else {
        ((value.min(max) as u128 * 255) / max as u128) as u8
    }
}

/// Render one pixel row per input row, `P3` header, 255 maxval, ASCII
/// triples separated by single spaces.
pub fn render_p3(width: usize, rows: &[Vec<u8>]) -> String {
    let mut out = format!("P3\n{} {}\n255\n", width, rows.len());
    for row in rows {
        debug_assert_eq!(row.len(), width);
        let mut line = String::new();
        for (i, &idx) in row.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            let [r, g, b] = ramp(idx);
            line.push_str(&format!("{r} {g} {b}"));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}
