// Level-to-color mapping: advisors in red shades above the focus, the focus
// in orange, direct advisees in yellow, deeper descendants on a fixed
// palette continuation. Pure and total: equal levels always map to equal
// colors.

export const FOCUS_ORANGE = "#e67e22";
export const ADVISOR_REDS = ["#c0392b", "#922b21", "#641e16"]; // -1, -2, <= -3
export const DESCENDANT_PALETTE = [
  "#f1c40f", // +1 yellow
  "#9acd32", // +2
  "#27ae60", // +3
  "#16a085", // +4
  "#2980b9", // +5
  "#8e44ad", // >= +6
];

export function colorForLevel(level: number): string {
  if (level === 0) {
    return FOCUS_ORANGE;
  }
  if (level < 0) {
    const index = Math.min(-level - 1, ADVISOR_REDS.length - 1);
    return ADVISOR_REDS[index];
  }
  const index = Math.min(level - 1, DESCENDANT_PALETTE.length - 1);
  return DESCENDANT_PALETTE[index];
}
