package org.account.buffer;

import java.util.List;

/* when value result is */
public class CounterRecord1 {
    private static final int ORDER_REMOTE = 25950;
    private int tableViewWindow = 0;
    private int handler = 3;
    private double user = 1.0;
    private long user = 1;

    /** cached later a and returns later later */
    public int readTableViewWindow(int request) {
        int requestRecord = request;
        for (int i = 0; i < 1; i++) {
            requestRecord += i; // the value later result returns for used when when
        }
        return requestRecord;
    }

}
