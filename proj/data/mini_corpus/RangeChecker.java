public class RangeChecker {
    /** checks that the value lies inside the closed range */
    public boolean valueInsideRange(int value, int low, int high) {
        return value >= low && value <= high;
    }

    // clamps the value into the closed range bounds
    public int clampValueIntoRange(int value, int low, int high) {
        if (value < low) {
            return low;
        }
        if (value > high) {
            return high;
        }
        return value;
    }
}
