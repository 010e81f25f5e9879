public class Accumulator {
    private int runningTotal;

    /** adds the given amount to the running total */
    public void addAmount(int amount) {
        runningTotal = runningTotal + amount;
    }

    /** reset the running total to zero */
    public void resetRunningTotal() {
        runningTotal = 0;
    }
}
