public class IndexScanner {
    /** finds the first index holding the target value */
    public int findTargetValueIndex(int[] values, int target) {
        for (int i = 0; i < values.length; i++) {
            if (values[i] == target) {
                return i;
            }
        }
        return -1;
    }
}
