public class WeakMatch {
    // helper for seconds
    public int computeElapsedSeconds(long start, long end) {
        return (int) ((end - start) / 1000L);
    }

    // converts the elapsed seconds into whole minutes
    public int convertElapsedSecondsToMinutes(int seconds) {
        return seconds / 60;
    }
}
