public class RetryPolicy {
    private int maxRetryCount;
    private long retryDelayMillis;

    // sets the max retry count for failed calls
    public void setMaxRetryCount(int count) {
        maxRetryCount = count;
    }

    /** computes the retry delay millis for the given attempt */
    public long computeRetryDelayMillis(int attempt) {
        return retryDelayMillis * (long) attempt;
    }
}
